#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace hermrank {

/// Signature (r, s, t) of a diagonal hermitian form on C^n, n = r+s+t:
/// r positive directions, s negative, t null.
struct Signature {
    int r = 0;
    int s = 0;
    int t = 0;

    Signature() = default;
    Signature(int r_, int s_, int t_) : r(r_), s(s_), t(t_) {
        if (r < 0 || s < 0 || t < 0) throw invalid_signature();
    }

    std::size_t n() const { return std::size_t(r) + std::size_t(s) + std::size_t(t); }

    /// Weight eps_k of coordinate k (0-based): +1, -1 or 0.
    int weight(std::size_t k) const {
        if (k < std::size_t(r)) return 1;
        if (k < std::size_t(r) + std::size_t(s)) return -1;
        if (k < n()) return 0;
        throw shape_mismatch("coordinate index out of range");
    }

    bool is_definite() const { return s == 0 && t == 0; }
    bool is_degenerate() const { return t > 0; }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.r == b.r && a.s == b.s && a.t == b.t;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

    std::string str() const {
        return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
    }
};

/// A bihomogeneous-in-spirit form sum c_{ab} z^a zbar^b, stored polarized:
/// the key (alpha, beta) carries the holomorphic exponent alpha and the
/// antiholomorphic exponent beta.  Term order is graded lex on the
/// concatenated exponent vector (total bidegree first, then alpha, then beta).
class BiForm {
public:
    struct KeyLess {
        bool operator()(const std::pair<Monomial, Monomial>& a,
                        const std::pair<Monomial, Monomial>& b) const {
            const unsigned da = a.first.degree() + a.second.degree();
            const unsigned db = b.first.degree() + b.second.degree();
            if (da != db) return da < db;
            const int ca = Monomial::grlex_compare(a.first, b.first);
            if (ca != 0) return ca < 0;
            return Monomial::grlex_compare(a.second, b.second) < 0;
        }
    };
    using Key = std::pair<Monomial, Monomial>;
    using TermMap = std::map<Key, GaussianRational, KeyLess>;

    explicit BiForm(std::size_t nvars = 0) : nvars_(nvars) {}

    static BiForm zero(std::size_t nvars) { return BiForm(nvars); }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    GaussianRational coeff(const Monomial& a, const Monomial& b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? GaussianRational{0} : it->second;
    }

    void add_term(const Monomial& a, const Monomial& b, const GaussianRational& c) {
        if (a.nvars() != nvars_ || b.nvars() != nvars_) throw variable_count_mismatch();
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(Key{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Key& leading_key() const {
        if (terms_.empty()) throw zero_form();
        return terms_.rbegin()->first;
    }
    const GaussianRational& leading_coeff() const {
        if (terms_.empty()) throw zero_form();
        return terms_.rbegin()->second;
    }

    BiForm operator-() const {
        BiForm r(nvars_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    BiForm& operator+=(const BiForm& o) {
        check_vars(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    BiForm& operator-=(const BiForm& o) {
        check_vars(o);
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
    friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }

    friend BiForm operator*(const BiForm& a, const BiForm& b) {
        a.check_vars(b);
        BiForm r(a.nvars_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
        return r;
    }

    friend BiForm operator*(const GaussianRational& c, const BiForm& f) {
        BiForm r(f.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [k, fc] : f.terms_) r.terms_.emplace(k, c * fc);
        return r;
    }

    friend bool operator==(const BiForm& a, const BiForm& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiForm& a, const BiForm& b) { return !(a == b); }

    /// Polarized evaluation: substitutes x for z and y for zbar, with x and y
    /// fully independent Q(i) points.
    GaussianRational eval_polarized(const std::vector<GaussianRational>& x,
                                    const std::vector<GaussianRational>& y) const {
        if (x.size() != nvars_ || y.size() != nvars_) throw variable_count_mismatch();
        GaussianRational acc{0};
        for (const auto& [k, c] : terms_) {
            GaussianRational t = c;
            for (std::size_t i = 0; i < nvars_; ++i) {
                for (unsigned e = 0; e < k.first[i]; ++e) t *= x[i];
                for (unsigned e = 0; e < k.second[i]; ++e) t *= y[i];
            }
            acc += t;
        }
        return acc;
    }

    /// Floating-point polarized evaluation for the numeric cross-checker.
    std::complex<double> eval_polarized_c(const std::vector<std::complex<double>>& x,
                                          const std::vector<std::complex<double>>& y) const {
        if (x.size() != nvars_ || y.size() != nvars_) throw variable_count_mismatch();
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [k, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (std::size_t i = 0; i < nvars_; ++i) {
                for (unsigned e = 0; e < k.first[i]; ++e) t *= x[i];
                for (unsigned e = 0; e < k.second[i]; ++e) t *= y[i];
            }
            acc += t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + it->second.str() + ")*" + it->first.first.str() + "*conj[" +
                   it->first.second.str() + "]";
        }
        return out;
    }

private:
    void check_vars(const BiForm& o) const {
        if (nvars_ != o.nvars_) throw variable_count_mismatch();
    }

    std::size_t nvars_;
    TermMap terms_;
};

/// The standard weighted norm form ||z||^2_{r,s,t} = sum eps_k z_k zbar_k
/// as a biform in n = r+s+t variables.
inline BiForm inner_form(const Signature& sig) {
    BiForm f(sig.n());
    for (std::size_t k = 0; k < sig.n(); ++k) {
        const int w = sig.weight(k);
        if (w == 0) continue;
        Monomial u = Monomial::unit(sig.n(), k);
        f.add_term(u, u, GaussianRational{w});
    }
    return f;
}

/// The rank-one outer product f(z) * conj(g(z)) as a biform.
inline BiForm outer(const MultiPoly& f, const MultiPoly& g) {
    if (f.nvars() != g.nvars()) throw variable_count_mismatch();
    BiForm r(f.nvars());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) r.add_term(a, b, ca * cb.conj());
    return r;
}

/// The weighted pairing sum_j eps'_j phi_j(z) conj(psi_j(z)) of a tuple pair
/// against the target form.  Both tuples live in the *source* variables.
inline BiForm biform_from_pair(const std::vector<MultiPoly>& phi,
                               const std::vector<MultiPoly>& psi, const Signature& target) {
    if (phi.size() != psi.size()) throw shape_mismatch("tuple lengths differ");
    if (phi.size() != target.n()) throw shape_mismatch("tuple length != target dimension");
    if (phi.empty()) throw empty_tuple();
    const std::size_t n = phi[0].nvars();
    BiForm r(n);
    for (std::size_t j = 0; j < phi.size(); ++j) {
        if (phi[j].nvars() != n || psi[j].nvars() != n) throw variable_count_mismatch();
        const int w = target.weight(j);
        if (w == 0) continue;
        for (const auto& [a, ca] : phi[j].terms())
            for (const auto& [b, cb] : psi[j].terms())
                r.add_term(a, b, GaussianRational{w} * ca * cb.conj());
    }
    return r;
}

/// Single-divisor exact division of biforms: returns B / D when the division
/// terminates with zero remainder, nullopt otherwise.  Since (D) is a
/// principal ideal in the polarized polynomial ring, zero remainder is
/// equivalent to divisibility.
inline std::optional<BiForm> biform_divide(const BiForm& b, const BiForm& d) {
    if (b.nvars() != d.nvars()) throw variable_count_mismatch();
    if (d.is_zero()) throw division_by_zero("biform division by zero");
    const auto& [la, lb] = d.leading_key();
    const GaussianRational lc = d.leading_coeff();
    BiForm cur = b;
    BiForm q(b.nvars());
    while (!cur.is_zero()) {
        const auto& [a, bb] = cur.leading_key();
        if (!la.divides(a) || !lb.divides(bb)) return std::nullopt;
        const Monomial qa = la.quotient_of(a);
        const Monomial qb = lb.quotient_of(bb);
        const GaussianRational qc = cur.leading_coeff() / lc;
        q.add_term(qa, qb, qc);
        BiForm t(b.nvars());
        t.add_term(qa, qb, qc);
        cur -= t * d;
    }
    return q;
}

/// Divides by the standard norm form of `sig`.  Requires r+s >= 1.
inline std::optional<BiForm> divide_by_norm(const BiForm& b, const Signature& sig) {
    if (b.nvars() != sig.n()) throw variable_count_mismatch();
    if (sig.r + sig.s == 0) throw degenerate_norm();
    return biform_divide(b, inner_form(sig));
}

/// Checks c_{ab} == conj(c_{ba}) for every term.
inline bool hermitian_symmetric(const BiForm& b) {
    for (const auto& [k, c] : b.terms()) {
        if (b.coeff(k.second, k.first) != c.conj()) return false;
    }
    return true;
}

/// The coefficient matrix of a biform together with its (grlex-sorted) row
/// and column monomial labels.  Rows are indexed by alpha, columns by beta.
struct CoefficientMatrix {
    GQMatrix m;
    std::vector<Monomial> row_monomials;
    std::vector<Monomial> col_monomials;
};

inline CoefficientMatrix coefficient_matrix(const BiForm& b) {
    std::map<Monomial, std::size_t, Monomial::GrlexLess> rows, cols;
    for (const auto& [k, c] : b.terms()) {
        rows.emplace(k.first, 0);
        cols.emplace(k.second, 0);
    }
    CoefficientMatrix out;
    for (auto& [m, idx] : rows) {
        idx = out.row_monomials.size();
        out.row_monomials.push_back(m);
    }
    for (auto& [m, idx] : cols) {
        idx = out.col_monomials.size();
        out.col_monomials.push_back(m);
    }
    out.m = GQMatrix(out.row_monomials.size(), out.col_monomials.size());
    for (const auto& [k, c] : b.terms()) out.m(rows[k.first], cols[k.second]) = c;
    return out;
}

/// Hermitian rank: the rank of the coefficient matrix.  Zero iff B == 0.
inline std::size_t hermitian_rank(const BiForm& b) {
    if (b.is_zero()) return 0;
    return mat_rank(coefficient_matrix(b).m);
}

/// Result of diagonalizing a hermitian-symmetric biform:
/// B = sum_k w_k * f_k(z) * conj(f_k(z)) with nonzero rational weights w_k;
/// pos of them positive, neg negative.
struct HermitianSignature {
    int pos = 0;
    int neg = 0;
    std::vector<std::pair<Rational, MultiPoly>> witnesses;  // (weight, f_k)
};

/// Sylvester signature of a hermitian-symmetric biform, with explicit
/// diagonalizing witnesses.  Throws not_hermitian if B is not symmetric.
inline HermitianSignature hermitian_signature(const BiForm& b) {
    HermitianSignature out;
    if (b.is_zero()) return out;
    if (!hermitian_symmetric(b)) throw not_hermitian();
    // Symmetric biforms have the same alpha- and beta-support, so the
    // coefficient matrix is square hermitian with matching labels.
    CoefficientMatrix cm = coefficient_matrix(b);
    CongruenceResult cr = congruence_diagonalize(cm.m);
    out.pos = cr.positives;
    out.neg = cr.negatives;
    // P^dagger M P = D means M = Q^dagger D Q with Q = P^{-1}; the witness
    // functions are f_k(z) = sum_a conj(Q(k,a)) z^a, giving
    // B = sum_k d_k f_k conj(f_k) exactly.
    auto qinv = inverse(cr.p);
    if (!qinv) throw genericity_failure("congruence transform not invertible");
    const GQMatrix& q = *qinv;
    for (std::size_t k = 0; k < cr.diagonal.size(); ++k) {
        if (cr.diagonal[k].is_zero()) continue;
        MultiPoly f(b.nvars());
        for (std::size_t a = 0; a < cm.row_monomials.size(); ++a)
            f.add_term(cm.row_monomials[a], q(k, a).conj());
        out.witnesses.emplace_back(cr.diagonal[k], std::move(f));
    }
    return out;
}

/// Reconstructs sum_k w_k f_k conj(f_k) from signature witnesses (test aid).
inline BiForm reconstruct_from_witnesses(const HermitianSignature& hs, std::size_t nvars) {
    BiForm acc(nvars);
    for (const auto& [w, f] : hs.witnesses) acc += GaussianRational{w} * outer(f, f);
    return acc;
}

/// A rank-one factorization B = h1(z) * conj(h2(z)) with h1 monic (leading
/// coefficient 1 in grlex order).
struct RankFactor {
    MultiPoly h1;
    MultiPoly h2;
};

/// Factors a hermitian-rank-one biform.  Throws zero_form on B == 0; returns
/// nullopt when the rank is >= 2.
inline std::optional<RankFactor> rank_one_factor(const BiForm& b) {
    if (b.is_zero()) throw zero_form();
    const auto& [a0, b0] = b.leading_key();
    // Candidate h1: the beta = b0 column of coefficients, normalized monic.
    MultiPoly h1(b.nvars());
    for (const auto& [k, c] : b.terms())
        if (k.second == b0) h1.add_term(k.first, c);
    const Monomial al = h1.leading_monomial();
    const GaussianRational lead = h1.leading_coeff();
    h1 = (GaussianRational{1} / lead) * h1;
    // Candidate h2 from the alpha = al row: c_{al, beta} = h1[al] * conj(h2[beta])
    // and h1[al] = 1 after normalization.
    MultiPoly h2(b.nvars());
    for (const auto& [k, c] : b.terms())
        if (k.first == al) h2.add_term(k.second, c.conj());
    // Rank one iff the outer product reproduces B exactly.
    if (outer(h1, h2) != b) return std::nullopt;
    return RankFactor{std::move(h1), std::move(h2)};
}

/// Holomorphic partial derivative d/dz_i of a biform.
inline BiForm dz(const BiForm& b, std::size_t i) {
    BiForm r(b.nvars());
    for (const auto& [k, c] : b.terms()) {
        const unsigned e = k.first[i];
        if (e == 0) continue;
        Monomial a = k.first;
        std::vector<unsigned> ex = a.exponents();
        ex[i] -= 1;
        r.add_term(Monomial(std::move(ex)), k.second, GaussianRational{long(e)} * c);
    }
    return r;
}

/// Antiholomorphic partial derivative d/dzbar_j of a biform.
inline BiForm dzbar(const BiForm& b, std::size_t j) {
    BiForm r(b.nvars());
    for (const auto& [k, c] : b.terms()) {
        const unsigned e = k.second[j];
        if (e == 0) continue;
        std::vector<unsigned> ex = k.second.exponents();
        ex[j] -= 1;
        r.add_term(k.first, Monomial(std::move(ex)), GaussianRational{long(e)} * c);
    }
    return r;
}

/// Symbolic mixed-Hessian test: B has hermitian rank <= 1 iff
/// B * d_i dbar_j B - (d_i B)(dbar_j B) == 0 for all i, j (the polarized form
/// of "ddbar log B vanishes").  Throws zero_form on B == 0.
inline bool ddbar_log_test(const BiForm& b) {
    if (b.is_zero()) throw zero_form();
    for (std::size_t i = 0; i < b.nvars(); ++i) {
        const BiForm di = dz(b, i);
        for (std::size_t j = 0; j < b.nvars(); ++j) {
            const BiForm dij = dzbar(di, j);
            if (!(b * dij - di * dzbar(b, j)).is_zero()) return false;
        }
    }
    return true;
}

/// Pullback of a biform along z = S u (and zbar = conj(S) ubar): the
/// restriction of the form to the column span of S, in the new coordinates u.
inline BiForm restrict_biform(const BiForm& b, const GQMatrix& s) {
    if (s.rows() != b.nvars()) throw shape_mismatch("substitution matrix rows != nvars");
    const std::size_t m = s.cols();
    // Group terms by alpha to reuse the holomorphic expansion.
    std::map<Monomial, MultiPoly, Monomial::GrlexLess> acache, bcache;
    const GQMatrix sc = s.conj();
    auto expand = [&](const Monomial& mon, const GQMatrix& mat,
                      std::map<Monomial, MultiPoly, Monomial::GrlexLess>& cache) -> const MultiPoly& {
        auto it = cache.find(mon);
        if (it != cache.end()) return it->second;
        MultiPoly p = restrict_linear(MultiPoly::term(mon, GaussianRational{1}), mat);
        return cache.emplace(mon, std::move(p)).first->second;
    };
    BiForm out(m);
    for (const auto& [k, c] : b.terms()) {
        const MultiPoly& pa = expand(k.first, s, acache);
        const MultiPoly& pb = expand(k.second, sc, bcache);
        for (const auto& [ma, ca] : pa.terms())
            for (const auto& [mb, cb] : pb.terms()) out.add_term(ma, mb, c * ca * cb);
    }
    return out;
}

}  // namespace hermrank
