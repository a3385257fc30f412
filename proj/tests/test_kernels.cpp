#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bicalc/kernels.hpp"
#include "bicalc/quadrature.hpp"

using namespace bicalc;

namespace {

using BD = Bicomplex<double>;
using C = std::complex<double>;

BD rand_bd(std::mt19937& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return BD::from_cartesian(u(rng), u(rng), u(rng), u(rng));
}

}  // namespace

TEST_CASE("complex fock kernel") {
    C z{0.3, -0.7}, w{-0.2, 0.4};
    CHECK(std::abs(fock_kernel_c(1, z, w) - std::exp(z * std::conj(w))) <= 1e-14);
    C k2 = std::exp(z * std::conj(w)) * (2.0 - std::norm(z - w));
    CHECK(std::abs(fock_kernel_c(2, z, w) - k2) <= 1e-14);
    for (unsigned n = 1; n <= 4; ++n) {
        C diag = fock_kernel_c(n, w, w);
        CHECK(std::abs(diag - double(n) * std::exp(std::norm(w))) <= 1e-14);
        CHECK(diag.real() > 0.0);
        CHECK(std::abs(fock_kernel_c(n, z, w) - std::conj(fock_kernel_c(n, w, z))) <= 1e-14);
    }
}

TEST_CASE("complex bergman kernel") {
    C z{0.3, -0.2}, w{0.1, 0.4};
    C b1 = 1.0 / (std::numbers::pi * std::pow(1.0 - std::conj(w) * z, 2.0));
    CHECK(std::abs(bergman_kernel_c(1, z, w) - b1) <= 1e-14);
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(std::abs(bergman_kernel_c(n, 0.0, 0.0) - double(n) * double(n) / std::numbers::pi) <=
              1e-13);
        CHECK(bergman_kernel_c(n, w, w).real() > 0.0);
        CHECK(std::abs(bergman_kernel_c(n, z, w) - std::conj(bergman_kernel_c(n, w, z))) <= 1e-13);
    }
    CHECK_THROWS_AS(bergman_kernel_c(1, C{1.0, 0.0}, w), DomainViolation);
}

TEST_CASE("bicomplex fock kernel") {
    std::mt19937 rng(3);
    BD Z = rand_bd(rng, 0.8), W = rand_bd(rng, 0.8);
    CHECK(euclidean_norm(fock_kernel_bc(1, Z, W) - bc_exp(Z * W.conjugate(Conj::star))) <= 1e-12);
    for (unsigned n = 1; n <= 4; ++n) {
        BD at0 = fock_kernel_bc(n, BD::zero(), BD::zero());
        CHECK(euclidean_norm(at0 - BD(double(n))) <= 1e-13);
        for (int i = 0; i < 100; ++i) {
            BD A = rand_bd(rng, 1.0), B = rand_bd(rng, 1.0);
            BD K = fock_kernel_bc(n, A, B);
            BD split{from_std<double>(fock_kernel_c(n, A.l1.to_std(), B.l1.to_std())),
                     from_std<double>(fock_kernel_c(n, A.l2.to_std(), B.l2.to_std()))};
            CHECK(euclidean_norm(K - split) <= 1e-12 * std::max(1.0, euclidean_norm(split)));
            // hermitian symmetry under the star conjugation
            BD KT = fock_kernel_bc(n, B, A).conjugate(Conj::star);
            CHECK(euclidean_norm(K - KT) <= 1e-12 * std::max(1.0, euclidean_norm(K)));
        }
    }
}

TEST_CASE("bicomplex bergman kernel") {
    std::mt19937 rng(5);
    for (unsigned n = 1; n <= 4; ++n) {
        BD at0 = bergman_kernel_bc(n, BD::zero(), BD::zero());
        CHECK(euclidean_norm(at0 - BD(double(n) * double(n) / std::numbers::pi)) <= 1e-12);
        for (int i = 0; i < 100; ++i) {
            BD Z = rand_bd(rng, 0.3), W = rand_bd(rng, 0.3);
            REQUIRE(in_product_ball(Z));
            REQUIRE(in_product_ball(W));
            BD K = bergman_kernel_bc(n, Z, W);
            BD D = bergman_kernel_bc_direct(n, Z, W);
            CHECK(euclidean_norm(K - D) <= 1e-12 * std::max(1.0, euclidean_norm(K)));
            BD KT = bergman_kernel_bc(n, W, Z).conjugate(Conj::star);
            CHECK(euclidean_norm(K - KT) <= 1e-12 * std::max(1.0, euclidean_norm(K)));
            BD diag = bergman_kernel_bc(n, Z, Z);
            CHECK(diag.l1.re > 0.0);
            CHECK(diag.l2.re > 0.0);
        }
    }
    BD n1Z = BD{Cx<double>{0.2, 0.1}, Cx<double>{-0.3, 0.2}};
    BD n1W = BD{Cx<double>{0.1, -0.2}, Cx<double>{0.25, 0.15}};
    BD u = BD::one() - n1W.conjugate(Conj::star) * n1Z;
    BD ref = (u * u).inverse() * (1.0 / std::numbers::pi);
    CHECK(euclidean_norm(bergman_kernel_bc(1, n1Z, n1W) - ref) <= 1e-13);

    BD outside{Cx<double>{2.0, 0.0}, Cx<double>{0.0, 0.0}};
    BD inside{Cx<double>{1.0, 0.0}, Cx<double>{0.5, 0.0}};
    CHECK_THROWS_AS(bergman_kernel_bc(1, inside, outside), DomainViolation);
}

TEST_CASE("fock reproducing property") {
    for (unsigned n = 1; n <= 3; ++n) {
        C w{0.3, -0.2};
        for (unsigned j = 0; j <= 3; ++j)
            for (unsigned k = 0; k < n; ++k) {
                auto f = [&](C z) { return std::pow(z, double(j)) * std::pow(std::conj(z), double(k)); };
                auto kn = [&](C z) { return fock_kernel_c(n, z, w); };
                C got = gaussian_inner_product_c(f, kn, 64);
                CHECK(std::abs(got - f(w)) <= 1e-6);
            }
    }
}

TEST_CASE("bergman reproducing property") {
    C w{0.25, -0.35};
    for (unsigned j = 0; j <= 4; ++j) {
        auto f = [&](C z) { return std::pow(z, double(j)); };
        auto b1 = [&](C z) { return bergman_kernel_c(1, z, w); };
        C got = disc_inner_product(f, b1, 64, 128);
        CHECK(std::abs(got - f(w)) <= 1e-6);
    }
}
