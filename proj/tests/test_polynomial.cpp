#include <doctest.h>

#include <random>

#include "bicalc/exp_polynomial.hpp"
#include "bicalc/hermite.hpp"
#include "bicalc/parser.hpp"
#include "bicalc/polynomial.hpp"

using namespace bicalc;

namespace {

using BQ = Bicomplex<Rational>;
using PQ = BCPolynomial<Rational>;

PQ P(const char* s) { return parse_expr<Rational>(s); }

}  // namespace

TEST_CASE("ring operations") {
    CHECK(P("Z") * P("Zs") == PQ::monomial({1, 0, 1, 0}, BQ::one()));
    CHECK((P("Z") + P("Zd")) * (P("Z") - P("Zd")) == P("Z^2 - Zd^2"));
    // e1 e2 = 0 kills the coefficient
    CHECK((P("Z").scaled(BQ::e1()) * P("Z").scaled(BQ::e2())).is_zero());
}

TEST_CASE("wirtinger derivatives") {
    CHECK(P("Z Zs").derivative(Var::Zstar) == P("Z"));
    CHECK(P("Z Zb Zs Zd").derivative(Var::Z) == P("Zb Zs Zd"));
    PQ zzb = P("Z Zb");
    PQ pk = PQ::constant(Rational(1));
    for (unsigned k = 1; k <= 5; ++k) {
        PQ prev = pk;
        pk *= zzb;
        CHECK(pk.derivative(Var::Zbar) ==
              P("Z").scaled(BQ(Rational(int(k)))) * prev);
    }
}

TEST_CASE("evaluation") {
    CHECK(P("Z^2").eval(BQ::e1()) == BQ::e1());
    BQ opj = BQ::from_cartesian(1, 0, 1, 0);
    CHECK(P("Z Zs").eval(opj) == BQ(Rational(2)));
    CHECK(P("Z Zb Zs Zd").eval(opj) == BQ(Rational(4)));
}

TEST_CASE("polynomial conjugation") {
    CHECK(P("Z").conjugated(Conj::star) == P("Zs"));
    BQ c = BQ::from_cartesian(1, 2, 0, -1);
    PQ m = PQ::monomial({3, 0, 2, 0}, c);
    CHECK(m.conjugated(Conj::star) ==
          PQ::monomial({2, 0, 3, 0}, c.conjugate(Conj::star)));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int i = 0; i < 100; ++i) {
        PQ Q;
        for (int t = 0; t < 4; ++t)
            Q.add_term({unsigned(num(rng) & 3), unsigned(num(rng) & 3),
                        unsigned(num(rng) & 3), unsigned(num(rng) & 3)},
                       BQ::from_cartesian(num(rng), num(rng), num(rng), num(rng)));
        BQ Z = BQ::from_cartesian(num(rng), num(rng), num(rng), num(rng));
        for (Conj v : {Conj::bar, Conj::star, Conj::dagger})
            CHECK(Q.conjugated(v).eval(Z) == Q.eval(Z).conjugate(v));
    }
}

TEST_CASE("laplacians") {
    CHECK(laplacian(P("Z Zs"), Laplacian::k) == P("1"));
    CHECK(laplacian(P("Z Zb Zs Zd"), Laplacian::F) == P("1"));
    CHECK(laplacian(P("Z Zs"), Laplacian::i).is_zero());
}

TEST_CASE("landau operator") {
    CHECK(landau_star(P("Z^4")).is_zero());
    CHECK(landau_star(P("Zs")) == P("Zs"));
    auto H22 = hermite_first<Rational>(Conj::star, 2, 2);
    CHECK(landau_star(H22) == H22.scaled(BQ(Rational(2))));
}

TEST_CASE("exp-polynomial derivatives") {
    ExpPolynomial<Rational> E{PQ::constant(Rational(1)), -P("Z Zs")};
    auto dE = E.derivative(Var::Zstar);
    CHECK(dE.prefactor == -P("Z"));
    CHECK(dE.exponent == E.exponent);

    ExpPolynomial<Rational> F{PQ::constant(Rational(1)), -P("Z Zb Zs Zd")};
    CHECK(F.derivative(Var::Zdag).prefactor == -P("Z Zb Zs"));

    ExpPolynomial<Rational> G{PQ::constant(Rational(1)), PQ{}};
    CHECK(G.derivative(Var::Z).prefactor.is_zero());
}

TEST_CASE("first-kind rodrigues") {
    for (unsigned m = 0; m <= 4; ++m) CHECK(rodrigues<Rational>(m, 0, Conj::star) ==
                                            PQ::monomial({m, 0, 0, 0}, BQ::one()));
    CHECK(rodrigues<Rational>(1, 1, Conj::star) == P("Z Zs - 1"));
    for (unsigned n = 0; n <= 4; ++n) CHECK(rodrigues<Rational>(0, n, Conj::bar) ==
                                            PQ::monomial({0, n, 0, 0}, BQ::one()));
    // derivative order is immaterial: conjugate derivatives first
    ExpPolynomial<Rational> E{PQ::constant(Rational(1)), -P("Z Zs")};
    for (int i = 0; i < 2; ++i) E = E.derivative(Var::Zstar);
    for (int i = 0; i < 2; ++i) E = E.derivative(Var::Z);
    CHECK(E.prefactor == rodrigues<Rational>(2, 2, Conj::star));
}

TEST_CASE("multiorder") {
    CHECK(multiorder(P("Z^5")) == MultiOrder{1, 1, 1});
    CHECK(multiorder(hermite_first<Rational>(Conj::star, 1, 2)) == MultiOrder{1, 3, 1});
    CHECK(multiorder(P("Zb Zd^3")) == MultiOrder{2, 1, 4});
}

TEST_CASE("star decomposition") {
    auto layers = star_decompose(P("Z + Zs Z^2"));
    REQUIRE(layers.size() == 2);
    CHECK(layers[0] == P("Z"));
    CHECK(layers[1] == P("Z^2"));

    CHECK_THROWS_AS(star_decompose(P("Zb")), NotStarPolyanalytic);

    auto h11 = star_decompose(hermite_first<Rational>(Conj::star, 1, 1));
    REQUIRE(h11.size() == 2);
    CHECK(h11[0] == P("-1"));
    CHECK(h11[1] == P("Z"));

    std::mt19937 rng(9);
    std::uniform_int_distribution<unsigned> d(0, 4);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 50; ++i) {
        PQ Q;
        for (int t = 0; t < 5; ++t)
            Q.add_term({d(rng), 0, d(rng), 0},
                       BQ::from_cartesian(c(rng), c(rng), c(rng), c(rng)));
        auto parts = star_decompose(Q);
        PQ back;
        for (unsigned l = 0; l < parts.size(); ++l)
            back += PQ::monomial({0, 0, l, 0}, BQ::one()) * parts[l];
        CHECK(back == Q);
    }
}

TEST_CASE("diagonal embedding recovers complex C-R values") {
    // a complex point z sits at z e1 + z e2; a (Z,Zs)-polynomial then takes
    // the classical g(z, conj z) value in both components
    PQ Q = P("Z Zs");  // |z|^2
    BQ z = BQ{Cx<Rational>{Rational(3), Rational(-2)}, Cx<Rational>{Rational(3), Rational(-2)}};
    BQ v = Q.eval(z);
    CHECK(v.l1 == Cx<Rational>{Rational(13)});
    CHECK(v.l2 == Cx<Rational>{Rational(13)});
}
