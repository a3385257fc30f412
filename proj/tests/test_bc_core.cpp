#include <doctest.h>

#include <random>

#include "bicalc/bicomplex.hpp"

using namespace bicalc;

namespace {

using BQ = Bicomplex<Rational>;
using BD = Bicomplex<double>;

Rational rq(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng)) / Rational(den(rng));
}

BQ random_bq(std::mt19937& rng) {
    return BQ::from_cartesian(rq(rng), rq(rng), rq(rng), rq(rng));
}

}  // namespace

TEST_CASE("cartesian <-> idempotent map") {
    CHECK(BQ::from_cartesian(1, 0, 0, 0) == BQ{Cx<Rational>{1}, Cx<Rational>{1}});
    // k = e1 - e2
    CHECK(BQ::from_cartesian(0, 0, 0, 1) == BQ::unit_k());
    // Z = i + j has lambda1 = 0, lambda2 = 2i
    BQ Z = BQ::from_cartesian(0, 1, 1, 0);
    CHECK(Z.l1 == Cx<Rational>{0});
    CHECK(Z.l2 == Cx<Rational>{0, 2});

    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        BQ W = random_bq(rng);
        auto x = W.to_cartesian();
        CHECK(BQ::from_cartesian(x[0], x[1], x[2], x[3]) == W);
    }
}

TEST_CASE("multiplication") {
    CHECK((BQ::e1() * BQ::e2()).is_zero());
    CHECK(BQ::unit_k() * BQ::unit_k() == BQ::one());
    // (1+j)^2 = 2j, lambda form ((1-i)^2, (1+i)^2) = (-2i, 2i)
    BQ opj = BQ::from_cartesian(1, 0, 1, 0);
    BQ sq = opj * opj;
    CHECK(sq == BQ::from_cartesian(0, 0, 2, 0));
    CHECK(sq.l1 == Cx<Rational>{0, -2});
    CHECK(sq.l2 == Cx<Rational>{0, 2});
}

TEST_CASE("inverse") {
    BQ Z{Cx<Rational>{2}, Cx<Rational>{4}};
    BQ inv = Z.inverse();
    CHECK(inv == BQ{Cx<Rational>{Rational(1) / 2}, Cx<Rational>{Rational(1) / 4}});
    CHECK(Z * inv == BQ::one());
    CHECK(BQ::one().inverse() == BQ::one());
    CHECK_THROWS_AS(BQ::e1().inverse(), ZeroDivisorError);
}

TEST_CASE("conjugations") {
    CHECK(BQ::e1().conjugate(Conj::star) == BQ::e1());
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        BQ Z = random_bq(rng);
        auto x = Z.to_cartesian();
        // dagger flips the sign of the j and k parts
        CHECK(Z.conjugate(Conj::dagger) == BQ::from_cartesian(x[0], x[1], -x[2], -x[3]));
        CHECK(Z.conjugate(Conj::bar).conjugate(Conj::bar) == Z);
        CHECK(Z.conjugate(Conj::bar).conjugate(Conj::dagger) == Z.conjugate(Conj::star));
    }
}

TEST_CASE("moduli") {
    BQ opj = BQ::from_cartesian(1, 0, 1, 0);
    CHECK(modulus_sq(opj, Modulus::i) == BQ(Rational(2)));
    CHECK(modulus_sq(opj, Modulus::k) == BQ(Rational(2)));
    CHECK(modulus_sq(BQ::e1(), Modulus::i).is_zero());

    CHECK(finsler_pow4(BQ::e1()) == Rational(0));
    CHECK(finsler_pow4(opj) == Rational(4));
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        Rational r = rq(rng);
        CHECK(finsler_pow4(BQ(r)) == r * r * r * r);
    }
}

TEST_CASE("euclidean norm") {
    CHECK(euclidean_norm(BD::e1()) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(euclidean_norm(BD::one()) == doctest::Approx(1.0));
    CHECK(euclidean_norm(BD::from_cartesian(0, 1, 1, 0)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("hyperbolic norm and order") {
    auto n = hyperbolic_norm(BD::e1());
    CHECK(n.s == doctest::Approx(1.0));
    CHECK(n.t == doctest::Approx(0.0));
    auto z = hyperbolic_norm(BD::zero());
    CHECK(z.s == 0.0);
    CHECK(z.t == 0.0);
    auto m = hyperbolic_norm(BD{Cx<double>{2.0}, Cx<double>{3.0}});
    CHECK(m.s == doctest::Approx(2.0));
    CHECK(m.t == doctest::Approx(3.0));

    // x + k y with x=1, y=2 lies outside D+
    CHECK_FALSE(dplus_contains(Hyperbolic<Rational>::from_cartesian(1, 2)));
    CHECK(hyp_leq(Hyperbolic<Rational>{0, 0}, Hyperbolic<Rational>::from_cartesian(1, 1)));
    Hyperbolic<Rational> a{Rational(3), Rational(-2)};
    CHECK(hyp_leq(a, a));
}

TEST_CASE("bc_exp") {
    BD one = bc_exp(BD::zero());
    CHECK(one.l1.re == doctest::Approx(1.0));
    // e^j = cos 1 + j sin 1
    BD ej = bc_exp(BD::from_cartesian(0, 0, 1, 0));
    auto x = ej.to_cartesian();
    CHECK(x[0] == doctest::Approx(std::cos(1.0)));
    CHECK(x[1] == doctest::Approx(0.0));
    CHECK(x[2] == doctest::Approx(std::sin(1.0)));
    CHECK(x[3] == doctest::Approx(0.0));

    CHECK_THROWS_AS(bc_exp(BQ::one()), ExactModeUnsupported);
}
