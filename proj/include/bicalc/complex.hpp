#pragma once

#include <cmath>
#include <complex>

#include "bicalc/scalar.hpp"

namespace bicalc {

// Minimal complex type usable over both double and Rational scalars
// (std::complex is only specified for floating-point types).
template <class T>
struct Cx {
    T re{};
    T im{};

    Cx() = default;
    Cx(T r) : re(std::move(r)) {}
    Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const Cx& a, const T& s) { return {a.re * s, a.im * s}; }
    friend Cx operator*(const T& s, const Cx& a) { return a * s; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        T d = b.norm_sq();
        if (d == T(0)) throw ZeroDivisorError();
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx& operator+=(const Cx& b) { return *this = *this + b; }
    Cx& operator-=(const Cx& b) { return *this = *this - b; }
    Cx& operator*=(const Cx& b) { return *this = *this * b; }

    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }

    Cx conj() const { return {re, -im}; }
    T norm_sq() const { return re * re + im * im; }
    bool is_zero() const { return re == T(0) && im == T(0); }

    double abs() const { return std::sqrt(to_double(norm_sq())); }
    std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }
};

template <class T>
Cx<T> from_std(const std::complex<double>& z) {
    return {T(z.real()), T(z.imag())};
}

}  // namespace bicalc
