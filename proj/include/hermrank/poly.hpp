#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "monomial.hpp"

namespace hermrank {

/// Multivariate polynomial over Q(i) with graded-lex term order.
/// The representation is canonical: zero coefficients are never stored and
/// terms live in a std::map keyed by monomial, so equal polynomials compare
/// equal structurally and serialization order is deterministic.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, Monomial::GrlexLess>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly zero(std::size_t nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(std::size_t nvars, const GaussianRational& c) {
        MultiPoly p(nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }

    /// The variable z_k (0-based).
    static MultiPoly variable(std::size_t nvars, std::size_t k) {
        MultiPoly p(nvars);
        p.add_term(Monomial::unit(nvars, k), GaussianRational{1});
        return p;
    }

    static MultiPoly term(const Monomial& m, const GaussianRational& c) {
        MultiPoly p(m.nvars());
        p.add_term(m, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// -1 for the zero polynomial, else the total degree.
    int degree() const {
        if (terms_.empty()) return -1;
        // With grlex order the map's last key has maximal total degree.
        return int(terms_.rbegin()->first.degree());
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = terms_.begin()->first.degree();
        return terms_.rbegin()->first.degree() == d;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw zero_form();
        return terms_.rbegin()->first;
    }

    const GaussianRational& leading_coeff() const {
        if (terms_.empty()) throw zero_form();
        return terms_.rbegin()->second;
    }

    GaussianRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational{0} : it->second;
    }

    void add_term(const Monomial& m, const GaussianRational& c) {
        if (m.nvars() != nvars_) throw variable_count_mismatch();
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend MultiPoly operator*(const GaussianRational& c, const MultiPoly& p) {
        MultiPoly r(p.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Exact evaluation at a point of Q(i)^n.
    GaussianRational eval(const std::vector<GaussianRational>& x) const {
        if (x.size() != nvars_) throw variable_count_mismatch();
        GaussianRational acc{0};
        for (const auto& [m, c] : terms_) {
            GaussianRational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned e = 0; e < m[i]; ++e) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// Coefficient-wise complex conjugate (variables untouched).
    MultiPoly conj_coeffs() const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
        return r;
    }

    /// Same polynomial viewed in nvars + extra variables.
    MultiPoly widened(std::size_t extra) const {
        MultiPoly r(nvars_ + extra);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m.widened(extra), c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + it->second.str() + ")*" + it->first.str();
        }
        return out;
    }

private:
    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw variable_count_mismatch();
    }

    std::size_t nvars_;
    TermMap terms_;
};

inline MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly r = MultiPoly::constant(p.nvars(), GaussianRational{1});
    for (unsigned k = 0; k < e; ++k) r = r * p;
    return r;
}

/// Homogenizes a tuple with one fresh last variable: every component is
/// multiplied through by powers of x_{n+1} up to the tuple's maximal degree d,
/// so all outputs are homogeneous of the same degree d.  Returns (tuple, d).
inline std::pair<std::vector<MultiPoly>, int> homogenize(const std::vector<MultiPoly>& ps) {
    if (ps.empty()) throw empty_tuple();
    const std::size_t n = ps[0].nvars();
    int d = -1;
    for (const auto& p : ps) {
        if (p.nvars() != n) throw variable_count_mismatch();
        d = std::max(d, p.degree());
    }
    if (d < 0) throw empty_tuple("all tuple components are zero");
    std::vector<MultiPoly> out;
    out.reserve(ps.size());
    for (const auto& p : ps) {
        MultiPoly q(n + 1);
        for (const auto& [m, c] : p.terms()) {
            q.add_term(m.widened(1).times_var(n, unsigned(d) - m.degree()), c);
        }
        out.push_back(std::move(q));
    }
    return {std::move(out), d};
}

/// Substitutes 1 for the last variable (the inverse of homogenize up to the
/// common x_{n+1} power).
inline MultiPoly dehomogenize(const MultiPoly& p) {
    if (p.nvars() == 0) throw variable_count_mismatch("no variable to dehomogenize");
    MultiPoly q(p.nvars() - 1);
    for (const auto& [m, c] : p.terms()) q.add_term(m.without_last(), c);
    return q;
}

/// Substitutes z = S u where S is n x m: the pullback of p along the linear
/// map Q(i)^m -> Q(i)^n with matrix S.  Result lives in m variables.
inline MultiPoly restrict_linear(const MultiPoly& p, const GQMatrix& s) {
    if (s.rows() != p.nvars()) throw shape_mismatch("substitution matrix rows != nvars");
    const std::size_t m = s.cols();
    // Linear forms L_k(u) = sum_j S(k,j) u_j, with power caching per variable.
    std::vector<MultiPoly> lin;
    lin.reserve(p.nvars());
    for (std::size_t k = 0; k < p.nvars(); ++k) {
        MultiPoly l(m);
        for (std::size_t j = 0; j < m; ++j) l.add_term(Monomial::unit(m, j), s(k, j));
        lin.push_back(std::move(l));
    }
    std::vector<std::vector<MultiPoly>> powers(p.nvars());
    auto lin_pow = [&](std::size_t k, unsigned e) -> const MultiPoly& {
        auto& cache = powers[k];
        if (cache.empty()) cache.push_back(MultiPoly::constant(m, GaussianRational{1}));
        while (cache.size() <= e) cache.push_back(cache.back() * lin[k]);
        return cache[e];
    };
    MultiPoly out(m);
    for (const auto& [mon, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(m, c);
        for (std::size_t k = 0; k < p.nvars(); ++k)
            if (mon[k] > 0) t = t * lin_pow(k, mon[k]);
        out += t;
    }
    return out;
}

}  // namespace hermrank
