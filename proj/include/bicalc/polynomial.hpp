#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bicalc/bicomplex.hpp"

namespace bicalc {

enum class Var { Z, Zbar, Zstar, Zdag };

/// Exponents (m,n,p,q) of the monomial Z^m Zb^n Zs^p Zd^q.
struct ExponentQuad {
    unsigned m = 0, n = 0, p = 0, q = 0;

    unsigned total() const { return m + n + p + q; }

    unsigned operator[](Var v) const {
        switch (v) {
            case Var::Z: return m;
            case Var::Zbar: return n;
            case Var::Zstar: return p;
            case Var::Zdag: return q;
        }
        return 0;
    }
    unsigned& operator[](Var v) {
        switch (v) {
            case Var::Z: return m;
            case Var::Zbar: return n;
            case Var::Zstar: return p;
            default: return q;
        }
    }

    friend bool operator==(const ExponentQuad&, const ExponentQuad&) = default;
};

// Graded lexicographic on (m,n,p,q); canonical term order for printing.
struct GradedLex {
    bool operator()(const ExponentQuad& a, const ExponentQuad& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.m != b.m) return a.m < b.m;
        if (a.n != b.n) return a.n < b.n;
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    }
};

/// Sparse polynomial over BC in the four formal variables Z, Zb, Zs, Zd.
/// Zero coefficients are never stored.
template <class T>
class BCPolynomial {
  public:
    using TermMap = std::map<ExponentQuad, Bicomplex<T>, GradedLex>;

    BCPolynomial() = default;

    static BCPolynomial constant(Bicomplex<T> c) {
        return monomial(ExponentQuad{}, std::move(c));
    }
    static BCPolynomial constant(T s) { return constant(Bicomplex<T>(s)); }
    static BCPolynomial variable(Var v) {
        ExponentQuad e;
        e[v] = 1;
        return monomial(e, Bicomplex<T>::one());
    }
    static BCPolynomial monomial(ExponentQuad e, Bicomplex<T> c) {
        BCPolynomial P;
        if (!c.is_zero()) P.terms_.emplace(e, std::move(c));
        return P;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExponentQuad& e, const Bicomplex<T>& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend BCPolynomial operator+(const BCPolynomial& A, const BCPolynomial& B) {
        BCPolynomial R = A;
        for (const auto& [e, c] : B.terms_) R.add_term(e, c);
        return R;
    }
    friend BCPolynomial operator-(const BCPolynomial& A, const BCPolynomial& B) {
        BCPolynomial R = A;
        for (const auto& [e, c] : B.terms_) R.add_term(e, -c);
        return R;
    }
    friend BCPolynomial operator-(const BCPolynomial& A) {
        BCPolynomial R;
        for (const auto& [e, c] : A.terms_) R.terms_.emplace(e, -c);
        return R;
    }
    friend BCPolynomial operator*(const BCPolynomial& A, const BCPolynomial& B) {
        BCPolynomial R;
        for (const auto& [ea, ca] : A.terms_)
            for (const auto& [eb, cb] : B.terms_)
                R.add_term({ea.m + eb.m, ea.n + eb.n, ea.p + eb.p, ea.q + eb.q}, ca * cb);
        return R;
    }
    BCPolynomial& operator+=(const BCPolynomial& B) { return *this = *this + B; }
    BCPolynomial& operator-=(const BCPolynomial& B) { return *this = *this - B; }
    BCPolynomial& operator*=(const BCPolynomial& B) { return *this = *this * B; }

    friend bool operator==(const BCPolynomial& A, const BCPolynomial& B) {
        return A.terms_ == B.terms_;
    }

    BCPolynomial scaled(const Bicomplex<T>& c) const {
        BCPolynomial R;
        for (const auto& [e, coeff] : terms_) R.add_term(e, coeff * c);
        return R;
    }

    /// Formal partial derivative, the four variables treated as independent.
    BCPolynomial derivative(Var v) const {
        BCPolynomial R;
        for (const auto& [e, c] : terms_) {
            unsigned deg = e[v];
            if (deg == 0) continue;
            ExponentQuad r = e;
            r[v] = deg - 1;
            R.add_term(r, c * T(int(deg)));
        }
        return R;
    }

    BCPolynomial derivative(Var v, unsigned times) const {
        BCPolynomial R = *this;
        for (unsigned i = 0; i < times; ++i) R = R.derivative(v);
        return R;
    }

    /// Substitutes Z and its three conjugates and evaluates in BC arithmetic.
    Bicomplex<T> eval(const Bicomplex<T>& Z) const {
        Bicomplex<T> zb = Z.conjugate(Conj::bar);
        Bicomplex<T> zs = Z.conjugate(Conj::star);
        Bicomplex<T> zd = Z.conjugate(Conj::dagger);
        Bicomplex<T> acc = Bicomplex<T>::zero();
        for (const auto& [e, c] : terms_)
            acc += c * Z.pow(e.m) * zb.pow(e.n) * zs.pow(e.p) * zd.pow(e.q);
        return acc;
    }

    /// Conjugation acts on coefficients and permutes the variable slots
    /// (bar: m<->n, p<->q; star: m<->p, n<->q; dagger: m<->q, n<->p), so that
    /// eval(conjugated(v), Z) = eval(Z).conjugate(v).
    BCPolynomial conjugated(Conj v) const {
        BCPolynomial R;
        for (const auto& [e, c] : terms_) {
            ExponentQuad r = e;
            switch (v) {
                case Conj::bar: std::swap(r.m, r.n); std::swap(r.p, r.q); break;
                case Conj::star: std::swap(r.m, r.p); std::swap(r.n, r.q); break;
                case Conj::dagger: std::swap(r.m, r.q); std::swap(r.n, r.p); break;
            }
            R.add_term(r, c.conjugate(v));
        }
        return R;
    }

    unsigned max_degree(Var v) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }

  private:
    TermMap terms_;
};

enum class Laplacian { i, j, k, F };

template <class T>
BCPolynomial<T> laplacian(const BCPolynomial<T>& P, Laplacian v) {
    switch (v) {
        case Laplacian::i: return P.derivative(Var::Z).derivative(Var::Zbar);
        case Laplacian::j: return P.derivative(Var::Z).derivative(Var::Zdag);
        case Laplacian::k: return P.derivative(Var::Z).derivative(Var::Zstar);
        case Laplacian::F:
            return P.derivative(Var::Z)
                .derivative(Var::Zbar)
                .derivative(Var::Zstar)
                .derivative(Var::Zdag);
    }
    return {};
}

// Factor operators of the star Landau operator G_* = B o A.
template <class T>
BCPolynomial<T> landau_factor_a(const BCPolynomial<T>& P) {
    return P.derivative(Var::Zstar);
}

template <class T>
BCPolynomial<T> landau_factor_b(const BCPolynomial<T>& P) {
    return -P.derivative(Var::Z) + BCPolynomial<T>::variable(Var::Zstar) * P;
}

/// G_*(P) = -Delta_k P + Zs d/dZs P.
template <class T>
BCPolynomial<T> landau_star(const BCPolynomial<T>& P) {
    return -laplacian(P, Laplacian::k) +
           BCPolynomial<T>::variable(Var::Zstar) * P.derivative(Var::Zstar);
}

struct MultiOrder {
    unsigned l = 1, k = 1, q = 1;
    friend bool operator==(const MultiOrder&, const MultiOrder&) = default;
};

/// Minimal (l,k,q) with d^l/dZb^l = d^k/dZs^k = d^q/dZd^q = 0.
template <class T>
MultiOrder multiorder(const BCPolynomial<T>& P) {
    return {P.max_degree(Var::Zbar) + 1, P.max_degree(Var::Zstar) + 1,
            P.max_degree(Var::Zdag) + 1};
}

/// Splits a polynomial in (Z, Zs) as sum of Zs^l f_l(Z) with each f_l
/// holomorphic; index l runs 0..n-1.
template <class T>
std::vector<BCPolynomial<T>> star_decompose(const BCPolynomial<T>& P) {
    if (P.max_degree(Var::Zbar) > 0 || P.max_degree(Var::Zdag) > 0)
        throw NotStarPolyanalytic();
    std::vector<BCPolynomial<T>> layers(P.max_degree(Var::Zstar) + 1);
    for (const auto& [e, c] : P.terms())
        layers[e.p].add_term({e.m, 0, 0, 0}, c);
    return layers;
}

}  // namespace bicalc
