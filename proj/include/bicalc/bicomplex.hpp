#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "bicalc/complex.hpp"
#include "bicalc/scalar.hpp"

namespace bicalc {

enum class Conj { bar, dagger, star };

template <class T>
struct Hyperbolic;

/// Bicomplex number stored as its idempotent pair Z = l1*e1 + l2*e2.
/// This is the only representation in which multiplication is componentwise;
/// Cartesian coordinates are computed views.
template <class T>
struct Bicomplex {
    Cx<T> l1{};
    Cx<T> l2{};

    Bicomplex() = default;
    Bicomplex(Cx<T> a, Cx<T> b) : l1(std::move(a)), l2(std::move(b)) {}
    Bicomplex(T real) : l1(real), l2(real) {}

    // lambda1 = (x1+x4) + i(x2-x3), lambda2 = (x1-x4) + i(x2+x3)
    static Bicomplex from_cartesian(const T& x1, const T& x2, const T& x3, const T& x4) {
        return {Cx<T>{x1 + x4, x2 - x3}, Cx<T>{x1 - x4, x2 + x3}};
    }

    std::array<T, 4> to_cartesian() const {
        // z1 = (l1+l2)/2, z2 = i(l1-l2)/2
        Cx<T> z1{(l1.re + l2.re) / T(2), (l1.im + l2.im) / T(2)};
        Cx<T> z2{(l2.im - l1.im) / T(2), (l1.re - l2.re) / T(2)};
        return {z1.re, z1.im, z2.re, z2.im};
    }

    static Bicomplex zero() { return {}; }
    static Bicomplex one() { return {Cx<T>{T(1)}, Cx<T>{T(1)}}; }
    static Bicomplex e1() { return {Cx<T>{T(1)}, Cx<T>{}}; }
    static Bicomplex e2() { return {Cx<T>{}, Cx<T>{T(1)}}; }
    static Bicomplex unit_i() { return from_cartesian(T(0), T(1), T(0), T(0)); }
    static Bicomplex unit_j() { return from_cartesian(T(0), T(0), T(1), T(0)); }
    static Bicomplex unit_k() { return {Cx<T>{T(1)}, Cx<T>{T(-1)}}; }

    friend Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
        return {a.l1 + b.l1, a.l2 + b.l2};
    }
    friend Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
        return {a.l1 - b.l1, a.l2 - b.l2};
    }
    friend Bicomplex operator-(const Bicomplex& a) { return {-a.l1, -a.l2}; }
    friend Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
        return {a.l1 * b.l1, a.l2 * b.l2};
    }
    friend Bicomplex operator*(const Bicomplex& a, const T& s) { return {a.l1 * s, a.l2 * s}; }
    friend Bicomplex operator*(const T& s, const Bicomplex& a) { return a * s; }
    Bicomplex& operator+=(const Bicomplex& b) { return *this = *this + b; }
    Bicomplex& operator-=(const Bicomplex& b) { return *this = *this - b; }
    Bicomplex& operator*=(const Bicomplex& b) { return *this = *this * b; }

    friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
        return a.l1 == b.l1 && a.l2 == b.l2;
    }

    bool is_zero() const { return l1.is_zero() && l2.is_zero(); }
    bool is_zero_divisor() const { return l1.is_zero() || l2.is_zero(); }

    Bicomplex inverse() const {
        if (is_zero_divisor()) throw ZeroDivisorError();
        return {Cx<T>{T(1)} / l1, Cx<T>{T(1)} / l2};
    }

    Bicomplex conjugate(Conj v) const {
        switch (v) {
            case Conj::bar: return {l2.conj(), l1.conj()};
            case Conj::dagger: return {l2, l1};
            case Conj::star: return {l1.conj(), l2.conj()};
        }
        return {};
    }

    Bicomplex pow(unsigned k) const {
        Bicomplex r = one();
        Bicomplex base = *this;
        for (; k; k >>= 1) {
            if (k & 1) r *= base;
            base *= base;
        }
        return r;
    }
};

template <class T>
Bicomplex<T> operator/(const Bicomplex<T>& a, const Bicomplex<T>& b) {
    return a * b.inverse();
}

enum class Modulus { i, j, k };

// |Z|^2_i = Z Z^dag = l1 l2 (diagonal, lands in C(i));
// |Z|^2_j = Z Zbar; |Z|^2_k = Z Z* = |l1|^2 e1 + |l2|^2 e2, in D+.
template <class T>
Bicomplex<T> modulus_sq(const Bicomplex<T>& Z, Modulus v) {
    switch (v) {
        case Modulus::i: return Z * Z.conjugate(Conj::dagger);
        case Modulus::j: return Z * Z.conjugate(Conj::bar);
        case Modulus::k: return Z * Z.conjugate(Conj::star);
    }
    return {};
}

/// Finsler-type fourth power Z Zbar Z* Zdag = |l1|^2 |l2|^2, real and >= 0.
template <class T>
T finsler_pow4(const Bicomplex<T>& Z) {
    return Z.l1.norm_sq() * Z.l2.norm_sq();
}

template <class T>
double euclidean_norm(const Bicomplex<T>& Z) {
    return std::sqrt((to_double(Z.l1.norm_sq()) + to_double(Z.l2.norm_sq())) / 2.0);
}

/// Hyperbolic pair s e1 + t e2 with real idempotent coefficients.
template <class T>
struct Hyperbolic {
    T s{};
    T t{};

    static Hyperbolic from_cartesian(const T& x, const T& y) { return {x + y, x - y}; }

    Bicomplex<T> to_bicomplex() const { return {Cx<T>{s}, Cx<T>{t}}; }
    T modulus_sq_d() const { return s * t; }

    friend Hyperbolic operator*(const Hyperbolic& a, const Hyperbolic& b) {
        return {a.s * b.s, a.t * b.t};
    }
    friend Hyperbolic operator+(const Hyperbolic& a, const Hyperbolic& b) {
        return {a.s + b.s, a.t + b.t};
    }
    friend bool operator==(const Hyperbolic& a, const Hyperbolic& b) {
        return a.s == b.s && a.t == b.t;
    }
};

template <class T>
bool dplus_contains(const Hyperbolic<T>& a) {
    return a.s >= T(0) && a.t >= T(0);
}

// Partial order on D: a <= b iff b - a lies in D+.
template <class T>
bool hyp_leq(const Hyperbolic<T>& a, const Hyperbolic<T>& b) {
    return b.s - a.s >= T(0) && b.t - a.t >= T(0);
}

template <class T>
Hyperbolic<double> hyperbolic_norm(const Bicomplex<T>& Z) {
    return {Z.l1.abs(), Z.l2.abs()};
}

template <class T>
Bicomplex<T> bc_exp(const Bicomplex<T>& Z) {
    if constexpr (is_exact_v<T>) {
        throw ExactModeUnsupported("bc_exp");
    } else {
        return {from_std<T>(std::exp(Z.l1.to_std())), from_std<T>(std::exp(Z.l2.to_std()))};
    }
}

}  // namespace bicalc
