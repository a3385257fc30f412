#pragma once

#include <json.hpp>

#include "bicalc/parser.hpp"

namespace bicalc {

namespace detail {

inline nlohmann::json scalar_json(double x) { return x; }
inline nlohmann::json scalar_json(const Rational& x) { return format_scalar(x); }

template <class T>
T scalar_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        std::size_t pos = 0;
        bool neg = !s.empty() && s[0] == '-';
        if (neg || (!s.empty() && s[0] == '+')) pos = 1;
        T v = ScalarLexer<T>::parse(s, pos);
        if (pos != s.size()) throw ParseError(pos, "end of scalar");
        return neg ? T(-v) : v;
    }
    return T(j.get<double>());
}

}  // namespace detail

/// {"cartesian":[x1,x2,x3,x4]}; exact scalars are rendered as strings.
template <class T>
nlohmann::json to_json_cartesian(const Bicomplex<T>& z) {
    auto x = z.to_cartesian();
    return {{"cartesian",
             {detail::scalar_json(x[0]), detail::scalar_json(x[1]), detail::scalar_json(x[2]),
              detail::scalar_json(x[3])}}};
}

/// {"idempotent":{"l1":[re,im],"l2":[re,im]}}
template <class T>
nlohmann::json to_json_idempotent(const Bicomplex<T>& z) {
    return {{"idempotent",
             {{"l1", {detail::scalar_json(z.l1.re), detail::scalar_json(z.l1.im)}},
              {"l2", {detail::scalar_json(z.l2.re), detail::scalar_json(z.l2.im)}}}}};
}

template <class T>
Bicomplex<T> bicomplex_from_json(const nlohmann::json& j) {
    if (j.contains("cartesian")) {
        const auto& a = j.at("cartesian");
        return Bicomplex<T>::from_cartesian(
            detail::scalar_from_json<T>(a.at(0)), detail::scalar_from_json<T>(a.at(1)),
            detail::scalar_from_json<T>(a.at(2)), detail::scalar_from_json<T>(a.at(3)));
    }
    const auto& idem = j.at("idempotent");
    return {Cx<T>{detail::scalar_from_json<T>(idem.at("l1").at(0)),
                  detail::scalar_from_json<T>(idem.at("l1").at(1))},
            Cx<T>{detail::scalar_from_json<T>(idem.at("l2").at(0)),
                  detail::scalar_from_json<T>(idem.at("l2").at(1))}};
}

}  // namespace bicalc
