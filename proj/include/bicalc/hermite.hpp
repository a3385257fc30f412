#pragma once

#include <algorithm>
#include <vector>

#include "bicalc/exp_polynomial.hpp"
#include "bicalc/polynomial.hpp"

namespace bicalc {

template <class T>
T factorial_t(unsigned n) {
    T r(1);
    for (unsigned i = 2; i <= n; ++i) r = r * T(int(i));
    return r;
}

template <class T>
T binomial_t(unsigned a, unsigned b) {
    if (b > a) return T(0);
    T r(1);
    for (unsigned i = 1; i <= b; ++i) r = r * T(int(a - b + i)) / T(int(i));
    return r;
}

/// First-kind bicomplex Hermite polynomial:
/// sum_k (-1)^k k! C(m,k) C(n,k) Z^{m-k} C^{n-k}, C the variant conjugate.
template <class T>
BCPolynomial<T> hermite_first(Conj variant, unsigned m, unsigned n) {
    Var cv = conj_var(variant);
    BCPolynomial<T> P;
    T coeff(1);  // (-1)^k k! C(m,k) C(n,k), built by recurrence
    for (unsigned k = 0; k <= std::min(m, n); ++k) {
        ExponentQuad e;
        e[Var::Z] = m - k;
        e[cv] = n - k;
        P.add_term(e, Bicomplex<T>(coeff));
        coeff = coeff * T(-int((m - k) * (n - k))) / T(int(k + 1));
    }
    return P;
}

/// Two-variable Ito sum H_{m,n}(a,b) evaluated on arbitrary arguments;
/// the idempotent split reduces every variant to this.
template <class T>
Cx<T> ito_eval(unsigned m, unsigned n, const Cx<T>& a, const Cx<T>& b) {
    std::vector<Cx<T>> apow(m + 1), bpow(n + 1);
    apow[0] = Cx<T>{T(1)};
    for (unsigned i = 1; i <= m; ++i) apow[i] = apow[i - 1] * a;
    bpow[0] = Cx<T>{T(1)};
    for (unsigned i = 1; i <= n; ++i) bpow[i] = bpow[i - 1] * b;
    Cx<T> acc{};
    T coeff(1);
    for (unsigned k = 0; k <= std::min(m, n); ++k) {
        acc += coeff * apow[m - k] * bpow[n - k];
        coeff = coeff * T(-int((m - k) * (n - k))) / T(int(k + 1));
    }
    return acc;
}

/// Split evaluation of H_{m,n}(Z,Z*):
/// H_{m,n}(l1, conj l1) e1 + H_{m,n}(l2, conj l2) e2.
template <class T>
Bicomplex<T> hermite_eval_split(unsigned m, unsigned n, const Bicomplex<T>& Z) {
    return {ito_eval(m, n, Z.l1, Z.l1.conj()), ito_eval(m, n, Z.l2, Z.l2.conj())};
}

/// Second kind via the Rodrigues operator tower over W = Z Zb Zs Zd;
/// normative definition in this library.
template <class T>
BCPolynomial<T> hermite_second_rodrigues(unsigned m, unsigned n, unsigned p, unsigned q) {
    ExpPolynomial<T> E{BCPolynomial<T>::constant(T(1)),
                       -BCPolynomial<T>::monomial({1, 1, 1, 1}, Bicomplex<T>::one())};
    for (unsigned i = 0; i < q; ++i) E = E.derivative(Var::Zdag);
    for (unsigned i = 0; i < p; ++i) E = E.derivative(Var::Zstar);
    for (unsigned i = 0; i < n; ++i) E = E.derivative(Var::Z);
    for (unsigned i = 0; i < m; ++i) E = E.derivative(Var::Zbar);
    BCPolynomial<T> R = E.prefactor;
    if ((m + n + p + q) % 2 == 1) R = -R;
    return R;
}

/// The printed closed-form triple sum for the second kind, implemented
/// verbatim for cross-comparison against the Rodrigues route. Known to
/// disagree with it (e.g. in sign at (0,0,0,1)); callers compare, they do
/// not reconcile.
template <class T>
BCPolynomial<T> hermite_second_closed(unsigned m, unsigned n, unsigned p, unsigned q) {
    if (q < m || q < n || q < p) throw ExponentUnderflow();
    T front = factorial_t<T>(m) * factorial_t<T>(n) * factorial_t<T>(p) * factorial_t<T>(q);
    if (q % 2 == 1) front = -front;
    BCPolynomial<T> sum;
    for (unsigned l = 0; l <= p; ++l)
        for (unsigned k = 0; k <= m; ++k)
            for (unsigned s = 0; s <= n; ++s) {
                T c = binomial_t<T>(p, l) * binomial_t<T>(m, k) * binomial_t<T>(n, s) *
                      binomial_t<T>(q + l + k + s, n) / factorial_t<T>(q + l + k + s);
                if ((l + k + s) % 2 == 1) c = -c;
                unsigned w = k + l + s;  // power of the Finsler monomial Z Zb Zs Zd
                sum.add_term({w, w, w, w}, Bicomplex<T>(c));
            }
    BCPolynomial<T> prefix =
        BCPolynomial<T>::monomial({q - n, q - m, q - p, 0}, Bicomplex<T>(front));
    return prefix * sum;
}

/// Truncated generating sum  sum_{m,n<=M} H_{m,n}(Z,C) U^m V^n / (m! n!);
/// converges to bc_exp(U Z + V C - U V) as M grows.
template <class T>
Bicomplex<T> generating_sum(Conj variant, const Bicomplex<T>& U, const Bicomplex<T>& V,
                            const Bicomplex<T>& Z, unsigned M) {
    Bicomplex<T> C = Z.conjugate(variant);
    std::vector<Bicomplex<T>> Upow(M + 1), Vpow(M + 1);
    Upow[0] = Vpow[0] = Bicomplex<T>::one();
    for (unsigned i = 1; i <= M; ++i) {
        Upow[i] = Upow[i - 1] * U;
        Vpow[i] = Vpow[i - 1] * V;
    }
    Bicomplex<T> acc = Bicomplex<T>::zero();
    T mfact(1);
    for (unsigned m = 0; m <= M; ++m) {
        if (m > 0) mfact = mfact * T(int(m));
        T nfact(1);
        for (unsigned n = 0; n <= M; ++n) {
            if (n > 0) nfact = nfact * T(int(n));
            Bicomplex<T> H{ito_eval(m, n, Z.l1, C.l1), ito_eval(m, n, Z.l2, C.l2)};
            acc += H * Upow[m] * Vpow[n] * (T(1) / (mfact * nfact));
        }
    }
    return acc;
}

}  // namespace bicalc
