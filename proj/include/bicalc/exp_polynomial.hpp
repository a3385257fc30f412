#pragma once

#include "bicalc/polynomial.hpp"

namespace bicalc {

/// P * e^{W} with both factors sparse polynomials. Closed under the four
/// Wirtinger derivatives: d(P e^W) = (dP + P dW) e^W.
template <class T>
struct ExpPolynomial {
    BCPolynomial<T> prefactor;
    BCPolynomial<T> exponent;

    ExpPolynomial derivative(Var v) const {
        return {prefactor.derivative(v) + prefactor * exponent.derivative(v), exponent};
    }
};

template <class T>
ExpPolynomial<T> gaussian_weight(Conj variant) {
    // e^{-Z C} with C the conjugate variable matching the variant.
    ExponentQuad w{1, 0, 0, 0};
    switch (variant) {
        case Conj::bar: w.n = 1; break;
        case Conj::star: w.p = 1; break;
        case Conj::dagger: w.q = 1; break;
    }
    return {BCPolynomial<T>::constant(T(1)),
            -BCPolynomial<T>::monomial(w, Bicomplex<T>::one())};
}

inline Var conj_var(Conj variant) {
    switch (variant) {
        case Conj::bar: return Var::Zbar;
        case Conj::star: return Var::Zstar;
        case Conj::dagger: return Var::Zdag;
    }
    return Var::Zbar;
}

/// First-kind Rodrigues construction:
/// (-1)^{m+n} e^{+W} d^m_C d^n_Z e^{-W}, W the variant's Gaussian exponent.
template <class T>
BCPolynomial<T> rodrigues(unsigned m, unsigned n, Conj variant) {
    ExpPolynomial<T> E = gaussian_weight<T>(variant);
    for (unsigned i = 0; i < n; ++i) E = E.derivative(Var::Z);
    Var cv = conj_var(variant);
    for (unsigned i = 0; i < m; ++i) E = E.derivative(cv);
    BCPolynomial<T> R = E.prefactor;
    if ((m + n) % 2 == 1) R = -R;
    return R;
}

}  // namespace bicalc
