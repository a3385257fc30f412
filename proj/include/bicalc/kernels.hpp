#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "bicalc/bicomplex.hpp"
#include "bicalc/hermite.hpp"

namespace bicalc {

/// Poly-Fock kernel of order n on the Gaussian plane:
/// e^{z conj(w)} sum_{k<n} ((-1)^k/k!) C(n,k+1) |z-w|^{2k}.
inline std::complex<double> fock_kernel_c(unsigned n, std::complex<double> z,
                                          std::complex<double> w) {
    double d2 = std::norm(z - w);
    double sum = 0.0, d2k = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        double c = to_double(binomial_t<double>(n, k + 1)) / to_double(factorial_t<double>(k));
        sum += (k % 2 ? -c : c) * d2k;
        d2k *= d2;
    }
    return std::exp(z * std::conj(w)) * sum;
}

/// Poly-Bergman kernel of order n on the unit disc.
inline std::complex<double> bergman_kernel_c(unsigned n, std::complex<double> z,
                                             std::complex<double> w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
        throw DomainViolation("bergman_kernel_c: arguments must lie in the open unit disc");
    std::complex<double> u = 1.0 - std::conj(w) * z;
    double u2 = std::norm(u);
    double d2 = std::norm(z - w);
    std::complex<double> sum = 0.0;
    for (unsigned k = 0; k < n; ++k) {
        double c = to_double(binomial_t<double>(n, k + 1)) * to_double(binomial_t<double>(n + k, n));
        sum += (k % 2 ? -c : c) * std::pow(u2, double(n - 1 - k)) * std::pow(d2, double(k));
    }
    return double(n) / (std::numbers::pi * std::pow(u, 2.0 * n)) * sum;
}

/// Bicomplex poly-Fock kernel, Fock formula lifted through bc_exp and the
/// k-modulus; splits componentwise into the complex kernel.
inline Bicomplex<double> fock_kernel_bc(unsigned n, const Bicomplex<double>& Z,
                                        const Bicomplex<double>& W) {
    Bicomplex<double> d2 = modulus_sq(Z - W, Modulus::k);
    Bicomplex<double> sum = Bicomplex<double>::zero();
    Bicomplex<double> d2l = Bicomplex<double>::one();
    for (unsigned l = 0; l < n; ++l) {
        double c = to_double(binomial_t<double>(n, l + 1)) / to_double(factorial_t<double>(l));
        sum += d2l * (l % 2 ? -c : c);
        d2l *= d2;
    }
    return bc_exp(Z * W.conjugate(Conj::star)) * sum;
}

inline bool in_product_ball(const Bicomplex<double>& Z) {
    return Z.l1.abs() < 1.0 && Z.l2.abs() < 1.0;
}

/// Bicomplex poly-Bergman kernel on the product-type unit ball; the split
/// form B_n(l1,mu1) e1 + B_n(l2,mu2) e2 is normative.
inline Bicomplex<double> bergman_kernel_bc(unsigned n, const Bicomplex<double>& Z,
                                           const Bicomplex<double>& W) {
    if (!in_product_ball(Z) || !in_product_ball(W))
        throw DomainViolation("bergman_kernel_bc: arguments must lie in the product unit ball");
    return {from_std<double>(bergman_kernel_c(n, Z.l1.to_std(), W.l1.to_std())),
            from_std<double>(bergman_kernel_c(n, Z.l2.to_std(), W.l2.to_std()))};
}

/// Direct evaluation of the printed bicomplex Bergman formula using integer
/// powers of the k-moduli only; consistency check against the split form.
inline Bicomplex<double> bergman_kernel_bc_direct(unsigned n, const Bicomplex<double>& Z,
                                                  const Bicomplex<double>& W) {
    if (!in_product_ball(Z) || !in_product_ball(W))
        throw DomainViolation("bergman_kernel_bc: arguments must lie in the product unit ball");
    Bicomplex<double> u = Bicomplex<double>::one() - W.conjugate(Conj::star) * Z;
    Bicomplex<double> u2 = modulus_sq(u, Modulus::k);
    Bicomplex<double> d2 = modulus_sq(Z - W, Modulus::k);
    Bicomplex<double> sum = Bicomplex<double>::zero();
    for (unsigned l = 0; l < n; ++l) {
        double c = to_double(binomial_t<double>(n, l + 1)) * to_double(binomial_t<double>(n + l, n));
        sum += u2.pow(n - 1 - l) * d2.pow(l) * (l % 2 ? -c : c);
    }
    Bicomplex<double> front = u.pow(2 * n).inverse() * (double(n) / std::numbers::pi);
    return front * sum;
}

}  // namespace bicalc
