#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "bicalc/polynomial.hpp"

namespace bicalc {

enum class Normalization { raw, pi_normalized };

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// 1D Gauss-Hermite rule for the weight e^{-t^2}; exact for polynomial
/// degree <= 2N-1. Newton iteration on the orthonormal recurrence.
inline QuadratureRule gauss_hermite_nodes(unsigned N) {
    constexpr double pim4 = 0.7511255444649425;  // pi^{-1/4}
    QuadratureRule rule;
    rule.nodes.assign(N, 0.0);
    rule.weights.assign(N, 0.0);
    const unsigned m = (N + 1) / 2;
    double z = 0.0, pp = 0.0;
    for (unsigned i = 1; i <= m; ++i) {
        if (i == 1)
            z = std::sqrt(2.0 * N + 1.0) - 1.85575 * std::pow(2.0 * N + 1.0, -0.16667);
        else if (i == 2)
            z -= 1.14 * std::pow(double(N), 0.426) / z;
        else if (i == 3)
            z = 1.86 * z - 0.86 * rule.nodes[0];
        else if (i == 4)
            z = 1.91 * z - 0.91 * rule.nodes[1];
        else
            z = 2.0 * z - rule.nodes[i - 3];
        for (int it = 0; it < 64; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (unsigned j = 1; j <= N; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * N) * p2;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        rule.nodes[i - 1] = z;
        rule.nodes[N - i] = -z;
        rule.weights[i - 1] = 2.0 / (pp * pp);
        rule.weights[N - i] = rule.weights[i - 1];
    }
    return rule;
}

/// Gauss-Legendre rule on [0,1].
inline QuadratureRule gauss_legendre01(unsigned N) {
    QuadratureRule rule;
    rule.nodes.assign(N, 0.0);
    rule.weights.assign(N, 0.0);
    const unsigned m = (N + 1) / 2;
    for (unsigned i = 1; i <= m; ++i) {
        double z = std::cos(std::numbers::pi * (i - 0.25) / (N + 0.5));
        double pp = 0.0, z1;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (unsigned j = 1; j <= N; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = N * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 1e-15);
        rule.nodes[i - 1] = 0.5 - 0.5 * z;
        rule.nodes[N - i] = 0.5 + 0.5 * z;
        rule.weights[i - 1] = 1.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[N - i] = rule.weights[i - 1];
    }
    return rule;
}

/// Tensor Gauss-Hermite approximation of  int f conj(g) e^{-|z|^2} dA,
/// divided by pi when pi-normalized.
template <class F, class G>
std::complex<double> gaussian_inner_product_c(F&& f, G&& g, unsigned N,
                                              Normalization norm = Normalization::pi_normalized) {
    QuadratureRule r = gauss_hermite_nodes(N);
    std::complex<double> acc = 0.0;
    for (unsigned ix = 0; ix < N; ++ix)
        for (unsigned iy = 0; iy < N; ++iy) {
            std::complex<double> z{r.nodes[ix], r.nodes[iy]};
            acc += r.weights[ix] * r.weights[iy] * f(z) * std::conj(g(z));
        }
    if (norm == Normalization::pi_normalized) acc /= std::numbers::pi;
    return acc;
}

namespace detail {

// lambda-restriction of a (Z,Zs)-polynomial to one idempotent component.
template <class T>
std::complex<double> split_component(const BCPolynomial<T>& P, int component,
                                     const std::complex<double>& lambda) {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : P.terms()) {
        const Cx<T>& cc = component == 1 ? c.l1 : c.l2;
        acc += cc.to_std() * std::pow(lambda, double(e.m)) *
               std::pow(std::conj(lambda), double(e.p));
    }
    return acc;
}

}  // namespace detail

/// Split-bicomplex inner product: componentwise pi-normalized Gaussian
/// integrals of the lambda-restrictions. Requires (Z,Zs)-only polynomials.
template <class T>
Bicomplex<double> split_inner_product(const BCPolynomial<T>& F, const BCPolynomial<T>& G,
                                      unsigned N) {
    if (F.max_degree(Var::Zbar) > 0 || F.max_degree(Var::Zdag) > 0 ||
        G.max_degree(Var::Zbar) > 0 || G.max_degree(Var::Zdag) > 0)
        throw NotSplitCompatible();
    auto ip = [&](int comp) {
        return gaussian_inner_product_c(
            [&](const std::complex<double>& z) { return detail::split_component(F, comp, z); },
            [&](const std::complex<double>& z) { return detail::split_component(G, comp, z); }, N);
    };
    return {from_std<double>(ip(1)), from_std<double>(ip(2))};
}

/// Full bicomplex inner product over C^2 with weight
/// e^{-(|l1|^2+|l2|^2)}, pi^2-normalized; F, G map (l1,l2) to Bicomplex.
template <class F, class G>
Bicomplex<double> full_inner_product(F&& f, G&& g, unsigned N) {
    QuadratureRule r = gauss_hermite_nodes(N);
    Bicomplex<double> acc = Bicomplex<double>::zero();
    for (unsigned a = 0; a < N; ++a)
        for (unsigned b = 0; b < N; ++b)
            for (unsigned c = 0; c < N; ++c)
                for (unsigned d = 0; d < N; ++d) {
                    std::complex<double> l1{r.nodes[a], r.nodes[b]};
                    std::complex<double> l2{r.nodes[c], r.nodes[d]};
                    double w = r.weights[a] * r.weights[b] * r.weights[c] * r.weights[d];
                    Bicomplex<double> fv = f(l1, l2);
                    Bicomplex<double> gv = g(l1, l2);
                    acc += Bicomplex<double>{fv.l1 * gv.l1.conj(), fv.l2 * gv.l2.conj()} * w;
                }
    double pi2 = std::numbers::pi * std::numbers::pi;
    return {acc.l1 * (1.0 / pi2), acc.l2 * (1.0 / pi2)};
}

/// Polar rule on the unit disc: Gauss-Legendre in r^2, uniform in theta;
/// approximates  int_disc f conj(g) dA.
template <class F, class G>
std::complex<double> disc_inner_product(F&& f, G&& g, unsigned Nr, unsigned Ntheta) {
    QuadratureRule rad = gauss_legendre01(Nr);
    std::complex<double> acc = 0.0;
    const double dtheta = 2.0 * std::numbers::pi / Ntheta;
    for (unsigned i = 0; i < Nr; ++i) {
        double rr = std::sqrt(rad.nodes[i]);
        for (unsigned jj = 0; jj < Ntheta; ++jj) {
            double th = dtheta * jj;
            std::complex<double> z = std::polar(rr, th);
            acc += 0.5 * rad.weights[i] * dtheta * f(z) * std::conj(g(z));
        }
    }
    return acc;
}

}  // namespace bicalc
