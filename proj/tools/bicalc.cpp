// Command-line surface: evaluation, differentiation, Hermite polynomials,
// kernels, Gram tables, star decomposition and the verification suites.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicalc/verify.hpp"

using namespace bicalc;
using nlohmann::json;

namespace {

bool exact_mode(const std::string& flag) {
    if (flag == "exact") return true;
    if (flag == "float") return false;
    const char* env = std::getenv("BICALC_MODE");
    if (env && std::string(env) == "float") return false;
    return true;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

template <class T>
void run_eval(const std::string& expr, const std::string& at) {
    auto P = parse_expr<T>(expr);
    auto Z = parse_literal<T>(at);
    auto v = P.eval(Z);
    emit({{"expr", format_expr(P)},
          {"at", format_literal(Z)},
          {"value", to_json_cartesian(v)},
          {"value_idempotent", to_json_idempotent(v)}});
}

template <class T>
void run_diff(const std::string& expr, Var wrt, unsigned repeat) {
    auto P = parse_expr<T>(expr).derivative(wrt, repeat);
    emit({{"result", format_expr(P)}});
}

template <class T>
void run_decompose(const std::string& expr) {
    auto layers = star_decompose(parse_expr<T>(expr));
    json out = json::array();
    for (const auto& f : layers) out.push_back(format_expr(f));
    emit({{"layers", out}});
}

template <class T>
void run_multiorder(const std::string& expr) {
    MultiOrder mo = multiorder(parse_expr<T>(expr));
    emit({{"l", mo.l}, {"k", mo.k}, {"q", mo.q}});
}

template <class T>
void run_hermite(const std::string& kind, Conj variant, unsigned m, unsigned n, unsigned p,
                 unsigned q, const std::string& at) {
    BCPolynomial<T> H = kind == "first" ? hermite_first<T>(variant, m, n)
                                        : hermite_second_rodrigues<T>(m, n, p, q);
    json out = {{"kind", kind}, {"expr", format_expr(H)}};
    if (!at.empty()) {
        auto Z = parse_literal<T>(at);
        out["at"] = format_literal(Z);
        out["value"] = to_json_cartesian(H.eval(Z));
    }
    emit(out);
}

Var parse_var(const std::string& s) {
    if (s == "Z") return Var::Z;
    if (s == "Zb") return Var::Zbar;
    if (s == "Zs") return Var::Zstar;
    if (s == "Zd") return Var::Zdag;
    throw CLI::ValidationError("--wrt must be one of Z, Zb, Zs, Zd");
}

Conj parse_conj(const std::string& s) {
    if (s == "bar") return Conj::bar;
    if (s == "star") return Conj::star;
    if (s == "dagger") return Conj::dagger;
    throw CLI::ValidationError("--variant must be bar, star or dagger");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicomplex algebra and Wirtinger calculus toolkit"};
    app.require_subcommand(1);

    std::string expr, at, mode, wrt = "Z", kind = "first", variant = "star";
    std::string space = "fock", realm = "complex", zlit, wlit;
    std::string suite = "all", report_path, out_path;
    unsigned repeat = 1, m = 0, n = 0, p = 0, q = 0, order = 1;
    unsigned max_m = 4, max_n = 4, nodes = 32, max_degree = 6;
    double tol = 1e-10;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial at a bicomplex point");
    eval_cmd->add_option("--expr", expr)->required();
    eval_cmd->add_option("--at", at)->required();
    eval_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));

    auto* diff_cmd = app.add_subcommand("diff", "formal Wirtinger derivative");
    diff_cmd->add_option("--expr", expr)->required();
    diff_cmd->add_option("--wrt", wrt)->required();
    diff_cmd->add_option("--repeat", repeat);

    auto* hermite_cmd = app.add_subcommand("hermite", "Hermite polynomials of either kind");
    hermite_cmd->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));
    hermite_cmd->add_option("--variant", variant);
    hermite_cmd->add_option("--m", m)->required();
    hermite_cmd->add_option("--n", n)->required();
    hermite_cmd->add_option("--p", p);
    hermite_cmd->add_option("--q", q);
    hermite_cmd->add_option("--at", at);

    auto* kernel_cmd = app.add_subcommand("kernel", "poly-Fock / poly-Bergman kernel values");
    kernel_cmd->add_option("--space", space)->check(CLI::IsMember({"fock", "bergman"}));
    kernel_cmd->add_option("--realm", realm)->check(CLI::IsMember({"complex", "bicomplex"}));
    kernel_cmd->add_option("--order", order)->required();
    kernel_cmd->add_option("--z", zlit)->required();
    kernel_cmd->add_option("--w", wlit)->required();

    auto* gram_cmd = app.add_subcommand("gram", "CSV Gram table of split inner products");
    gram_cmd->add_option("--variant", variant);
    gram_cmd->add_option("--max-m", max_m);
    gram_cmd->add_option("--max-n", max_n);
    gram_cmd->add_option("--nodes", nodes);
    gram_cmd->add_option("--out", out_path);

    auto* dec_cmd = app.add_subcommand("decompose", "star polyanalytic decomposition");
    dec_cmd->add_option("--expr", expr)->required();

    auto* mo_cmd = app.add_subcommand("multiorder", "minimal annihilating derivative orders");
    mo_cmd->add_option("--expr", expr)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite);
    verify_cmd->add_option("--max-degree", max_degree);
    verify_cmd->add_option("--tol", tol);
    verify_cmd->add_option("--report", report_path);

    CLI11_PARSE(app, argc, argv);

    try {
        bool exact = exact_mode(mode);
        if (*eval_cmd) {
            exact ? run_eval<Rational>(expr, at) : run_eval<double>(expr, at);
        } else if (*diff_cmd) {
            Var v = parse_var(wrt);
            exact ? run_diff<Rational>(expr, v, repeat) : run_diff<double>(expr, v, repeat);
        } else if (*hermite_cmd) {
            Conj cv = parse_conj(variant);
            exact ? run_hermite<Rational>(kind, cv, m, n, p, q, at)
                  : run_hermite<double>(kind, cv, m, n, p, q, at);
        } else if (*kernel_cmd) {
            auto Z = parse_literal<double>(zlit);
            auto W = parse_literal<double>(wlit);
            json out = {{"space", space}, {"realm", realm}, {"order", order}};
            if (realm == "complex") {
                auto x = Z.to_cartesian();
                auto y = W.to_cartesian();
                std::complex<double> z{x[0], x[1]}, w{y[0], y[1]};
                std::complex<double> v = space == "fock" ? fock_kernel_c(order, z, w)
                                                         : bergman_kernel_c(order, z, w);
                out["value"] = {v.real(), v.imag()};
            } else {
                Bicomplex<double> v = space == "fock" ? fock_kernel_bc(order, Z, W)
                                                      : bergman_kernel_bc(order, Z, W);
                out["value"] = to_json_cartesian(v);
            }
            emit(out);
        } else if (*gram_cmd) {
            std::string csv = gram_csv(parse_conj(variant), max_m, max_n, nodes);
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                std::ofstream f(out_path);
                f << csv;
            }
        } else if (*dec_cmd) {
            exact ? run_decompose<Rational>(expr) : run_decompose<double>(expr);
        } else if (*mo_cmd) {
            exact ? run_multiorder<Rational>(expr) : run_multiorder<double>(expr);
        } else if (*verify_cmd) {
            VerifyOptions opt;
            opt.max_degree = max_degree;
            opt.tol = tol;
            opt.nodes = nodes;
            auto results = run_suites(suite, opt);
            json rep = report_json(results);
            if (suite == "all" || suite == "second-kind")
                rep["second_kind_discrepancies"] = second_kind_discrepancy_report(2);
            emit(rep);
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                f << rep.dump(2) << "\n";
            }
            return rep.at("passed").get<bool>() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
