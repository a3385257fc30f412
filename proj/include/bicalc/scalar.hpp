#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bicalc {

// Exact scalar used by the identity suites. Float suites use plain double.
using Rational = boost::multiprecision::cpp_rational;

template <class T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

struct ZeroDivisorError : std::domain_error {
    ZeroDivisorError() : std::domain_error("bicomplex number has a vanishing idempotent component") {}
};

struct ExactModeUnsupported : std::logic_error {
    explicit ExactModeUnsupported(const std::string& what)
        : std::logic_error(what + " is not available in exact-rational mode") {}
};

struct DomainViolation : std::domain_error {
    explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

struct NotStarPolyanalytic : std::domain_error {
    NotStarPolyanalytic() : std::domain_error("polynomial depends on Zb or Zd") {}
};

struct NotSplitCompatible : std::domain_error {
    NotSplitCompatible() : std::domain_error("polynomial carries Zb or Zd exponents") {}
};

struct ExponentUnderflow : std::domain_error {
    ExponentUnderflow() : std::domain_error("closed form requires q >= m, q >= n and q >= p") {}
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(position) +
                             ": expected " + expected),
          pos(position),
          expected_tokens(expected) {}
    std::size_t pos;
    std::string expected_tokens;
};

}  // namespace bicalc
