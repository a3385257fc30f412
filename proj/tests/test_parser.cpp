#include <doctest.h>

#include <random>

#include "bicalc/hermite.hpp"
#include "bicalc/json_io.hpp"
#include "bicalc/parser.hpp"

using namespace bicalc;

namespace {

using BQ = Bicomplex<Rational>;
using PQ = BCPolynomial<Rational>;

}  // namespace

TEST_CASE("literal grammar") {
    CHECK(parse_literal<Rational>("1+2i+3j+4k") == BQ::from_cartesian(1, 2, 3, 4));
    CHECK(parse_literal<Rational>("-1/2 + 3/4 k") ==
          BQ::from_cartesian(Rational(-1) / 2, 0, 0, Rational(3) / 4));
    CHECK(parse_literal<Rational>("j") == BQ::unit_j());
    CHECK(parse_literal<double>("0.5-0.25i") == Bicomplex<double>::from_cartesian(0.5, -0.25, 0, 0));
    CHECK_THROWS_AS(parse_literal<Rational>("1+"), ParseError);

    for (const char* s : {"1+2i+3j+4k", "-1/2+3/4k", "0", "5", "-7i"}) {
        BQ z = parse_literal<Rational>(s);
        CHECK(parse_literal<Rational>(format_literal(z)) == z);
    }
}

TEST_CASE("expression grammar") {
    CHECK(parse_expr<Rational>("Z Zs - 1") == hermite_first<Rational>(Conj::star, 1, 1));
    CHECK(parse_expr<Rational>("(1+1j) Z^2") ==
          PQ::monomial({2, 0, 0, 0}, BQ::from_cartesian(1, 0, 1, 0)));
    CHECK(parse_expr<Rational>("Z*Zb") == parse_expr<Rational>("Z Zb"));
    CHECK(parse_expr<Rational>(" Z ^ 2  +  Zd ") == parse_expr<Rational>("Z^2+Zd"));

    try {
        parse_expr<Rational>("Z^");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("canonical formatting") {
    CHECK(format_expr(hermite_first<Rational>(Conj::star, 1, 1)) == "Z Zs - 1");
    CHECK(format_expr(PQ{}) == "0");
    CHECK(format_expr(hermite_first<Rational>(Conj::bar, 2, 2)) ==
          "Z^2 Zb^2 - 4 Z Zb + 2");
}

TEST_CASE("round trips on random polynomials") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-6, 6);
    std::uniform_int_distribution<unsigned> d(0, 4);
    for (int i = 0; i < 500; ++i) {
        PQ Q;
        for (int t = 0; t < 4; ++t)
            Q.add_term({d(rng), d(rng), d(rng), d(rng)},
                       BQ::from_cartesian(c(rng), c(rng), Rational(c(rng)) / 2, c(rng)));
        std::string s = format_expr(Q);
        CHECK(parse_expr<Rational>(s) == Q);
        CHECK(format_expr(parse_expr<Rational>(s)) == s);
    }
    // float coefficients round-trip through shortest decimals; dyadic
    // values keep the cartesian <-> idempotent changes of basis exact
    std::uniform_int_distribution<int> e(-24, 24);
    auto dy = [&] { return e(rng) * 0.125; };
    for (int i = 0; i < 100; ++i) {
        BCPolynomial<double> Q;
        for (int t = 0; t < 3; ++t)
            Q.add_term({d(rng), d(rng), d(rng), d(rng)},
                       Bicomplex<double>::from_cartesian(dy(), dy(), dy(), dy()));
        CHECK(parse_expr<double>(format_expr(Q)) == Q);
    }
}

TEST_CASE("json forms") {
    BQ z = BQ::from_cartesian(1, Rational(-2) / 3, 0, 4);
    CHECK(bicomplex_from_json<Rational>(to_json_cartesian(z)) == z);
    CHECK(bicomplex_from_json<Rational>(to_json_idempotent(z)) == z);

    Bicomplex<double> w = Bicomplex<double>::from_cartesian(0.25, -1.5, 3.125, 0);
    CHECK(bicomplex_from_json<double>(to_json_cartesian(w)) == w);
    CHECK(bicomplex_from_json<double>(to_json_idempotent(w)) == w);

    auto j = nlohmann::json::parse(R"({"idempotent":{"l1":[1,0],"l2":[0,2]}})");
    BQ v = bicomplex_from_json<Rational>(j);
    CHECK(v.l1 == Cx<Rational>{1});
    CHECK(v.l2 == Cx<Rational>{0, 2});
}
