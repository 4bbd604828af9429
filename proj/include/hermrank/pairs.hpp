#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biform.hpp"

namespace hermrank {

/// A pair of polynomial tuples phi, psi : C^n -> C^{n'} together with the
/// hermitian signatures of source and target.  The pair is *orthogonal* when
/// the weighted pairing sum eps'_j phi_j(x) conj(psi_j(y)) vanishes on the
/// incidence variety <x, y>_source = 0.
struct PolyMapPair {
    std::vector<MultiPoly> phi;
    std::vector<MultiPoly> psi;
    Signature source;
    Signature target;

    void validate() const {
        if (phi.empty()) throw empty_tuple();
        if (phi.size() != psi.size()) throw shape_mismatch("phi/psi lengths differ");
        if (phi.size() != target.n()) throw shape_mismatch("tuple length != target dimension");
        for (const auto& p : phi)
            if (p.nvars() != source.n()) throw variable_count_mismatch();
        for (const auto& p : psi)
            if (p.nvars() != source.n()) throw variable_count_mismatch();
    }

    bool is_map() const { return phi == psi; }
};

enum class PairKind { Null, QuasiStandard, Other };

inline std::string to_string(PairKind k) {
    switch (k) {
        case PairKind::Null: return "Null";
        case PairKind::QuasiStandard: return "QuasiStandard";
        default: return "Other";
    }
}

/// Weighted pairing biform of the pair (in the source variables).
inline BiForm pairing_biform(const PolyMapPair& pair) {
    pair.validate();
    return biform_from_pair(pair.phi, pair.psi, pair.target);
}

/// Divisibility test of the pairing by the source norm form.  For r+s = 0 the
/// incidence variety is everything, so orthogonality means the pairing
/// vanishes identically.
inline bool verify_pair(const PolyMapPair& pair) {
    BiForm p = pairing_biform(pair);
    if (pair.source.r + pair.source.s == 0) return p.is_zero();
    return biform_divide(p, inner_form(pair.source)).has_value();
}

/// The multiplier H with  sum eps'_j phi_j conj(psi_j) = ||z||^2_source * H.
/// Throws not_an_orthogonal_pair when the division leaves a remainder and
/// degenerate_norm when r+s = 0.
inline BiForm multiplier(const PolyMapPair& pair) {
    BiForm p = pairing_biform(pair);
    auto q = divide_by_norm(p, pair.source);
    if (!q) throw not_an_orthogonal_pair();
    return *q;
}

struct Classification {
    PairKind kind = PairKind::Other;
    BiForm mult;
    std::size_t rank = 0;
};

/// Classifies an orthogonal pair by the hermitian rank of its multiplier:
/// 0 -> Null, 1 -> QuasiStandard, >= 2 -> Other.  For a map (phi == psi) the
/// multiplier is additionally checked to be hermitian-symmetric, and of
/// signature (1,0) when the target is definite; a violation means corrupted
/// input and raises signature_obstruction.
inline Classification classify(const PolyMapPair& pair) {
    Classification out;
    out.mult = multiplier(pair);
    out.rank = hermitian_rank(out.mult);
    out.kind = out.rank == 0 ? PairKind::Null
             : out.rank == 1 ? PairKind::QuasiStandard
                             : PairKind::Other;
    if (pair.is_map() && out.kind == PairKind::QuasiStandard) {
        if (!hermitian_symmetric(out.mult))
            throw signature_obstruction("map multiplier is not hermitian-symmetric");
        if (pair.target.s == 0) {
            HermitianSignature hs = hermitian_signature(out.mult);
            if (hs.pos != 1 || hs.neg != 0)
                throw signature_obstruction("map multiplier is not positive of rank one");
        }
    }
    return out;
}

/// Quasi-standard normal form of an orthogonal pair:
///   phi = B [h1 z_1, ..., h1 z_{r+s}, Phi_1, ..., Phi_q]^T
///   psi = C [h2 z_1, ..., h2 z_{r+s}, Psi_1, ..., Psi_q]^T
/// with C^dagger B = H_{r,s,q}, certified for the *reduced* pair: the
/// target's null components dropped and the negative block of psi negated,
/// so the reduced target is definite.  lambda records the conformal factor
/// for map decompositions (1 for plain pair decompositions).
struct Decomposition {
    GQMatrix b;
    GQMatrix c;
    MultiPoly h1;
    MultiPoly h2;
    std::vector<MultiPoly> phi_extra;  // the Phi block, length q
    std::vector<MultiPoly> psi_extra;  // the Psi block, length q
    Rational lambda = Rational(1);
};

namespace detail {

/// Drops the target's null components and negates the negative block of psi:
/// afterwards the pair is orthogonal for the definite target (r'+s', 0, 0)
/// with the same pairing biform.
inline std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> reduce_target(
    const PolyMapPair& pair) {
    const std::size_t np = std::size_t(pair.target.r) + std::size_t(pair.target.s);
    std::vector<MultiPoly> phi(pair.phi.begin(), pair.phi.begin() + np);
    std::vector<MultiPoly> psi;
    psi.reserve(np);
    for (std::size_t j = 0; j < np; ++j) {
        psi.push_back(pair.target.weight(j) < 0 ? -pair.psi[j] : pair.psi[j]);
    }
    return {std::move(phi), std::move(psi)};
}

/// Row functionals against a rank-one factor: given tuples `comps` (length np,
/// n variables) and a factor h with
///   sum_a comps_a(x) * other_a(y) = h(x) * g(y) * <x, y>_sig
/// for some tuple `other` and factor g, returns rows l_0..l_{rs-1} with
///   sum_a l_k[a] * other-side identity  <=>  built from coefficient rows of
/// `comps` at the monomials lead(h) * x_k.  The linear system is lower
/// triangular with diagonal eps_k * leadcoeff(h), hence always solvable.
inline std::vector<std::vector<GaussianRational>> extraction_rows(
    const std::vector<MultiPoly>& comps, const MultiPoly& h, const Signature& src) {
    const std::size_t rs = std::size_t(src.r) + std::size_t(src.s);
    const std::size_t np = comps.size();
    const Monomial lead = h.leading_monomial();
    const GaussianRational lc = h.leading_coeff();

    // w_k[a] = coefficient of lead * z_k in comps[a].
    std::vector<std::vector<GaussianRational>> w(rs, std::vector<GaussianRational>(np));
    for (std::size_t k = 0; k < rs; ++k) {
        const Monomial mk = lead.times_var(k);
        for (std::size_t a = 0; a < np; ++a) w[k][a] = comps[a].coeff(mk);
    }

    // T[k][m] = eps_m * h[lead + e_k - e_m]; lower triangular in grlex order,
    // diagonal eps_k * lc != 0.
    auto shifted_coeff = [&](std::size_t k, std::size_t m) -> GaussianRational {
        std::vector<unsigned> e = lead.exponents();
        e[k] += 1;
        if (e[m] == 0) return GaussianRational{0};
        e[m] -= 1;
        return h.coeff(Monomial(std::move(e)));
    };
    std::vector<std::vector<GaussianRational>> t(rs, std::vector<GaussianRational>(rs));
    for (std::size_t k = 0; k < rs; ++k)
        for (std::size_t m = 0; m < rs; ++m)
            t[k][m] = GaussianRational{src.weight(m)} * shifted_coeff(k, m);

    // Forward substitution: rows l = T^{-1} w.
    std::vector<std::vector<GaussianRational>> l(rs, std::vector<GaussianRational>(np));
    for (std::size_t k = 0; k < rs; ++k) {
        std::vector<GaussianRational> acc = w[k];
        for (std::size_t m = 0; m < k; ++m) {
            if (t[k][m].is_zero()) continue;
            for (std::size_t a = 0; a < np; ++a) acc[a] -= t[k][m] * l[m][a];
        }
        for (std::size_t a = 0; a < np; ++a) l[k][a] = acc[a] / t[k][k];
    }
    return l;
}

/// Canonical basis of the span of a polynomial list via reduced row echelon
/// form.  Returns the basis and the expansion matrix N with
/// comps[a] = sum_i N[a][i] * basis[i].
struct SpanBasis {
    std::vector<MultiPoly> basis;
    std::vector<std::vector<GaussianRational>> expand;
};

inline SpanBasis span_basis(const std::vector<MultiPoly>& comps, std::size_t nvars) {
    // Column labels: every monomial that occurs, in grlex order.
    std::map<Monomial, std::size_t, Monomial::GrlexLess> cols;
    for (const auto& p : comps)
        for (const auto& [m, c] : p.terms()) cols.emplace(m, 0);
    std::vector<Monomial> labels;
    for (auto& [m, idx] : cols) {
        idx = labels.size();
        labels.push_back(m);
    }
    GQMatrix a(comps.size(), labels.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (const auto& [m, c] : comps[i].terms()) a(i, cols[m]) = c;

    // Gauss-Jordan to reduced row echelon form (exact).
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < a.cols() && pr < a.rows(); ++pc) {
        std::size_t sel = pr;
        while (sel < a.rows() && a(sel, pc).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(sel, j));
        const GaussianRational piv = a(pr, pc);
        for (std::size_t j = 0; j < a.cols(); ++j) a(pr, j) /= piv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pr || a(i, pc).is_zero()) continue;
            const GaussianRational f = a(i, pc);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(pr, j);
        }
        pivots.push_back(pc);
        ++pr;
    }

    SpanBasis out;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        MultiPoly p(nvars);
        for (std::size_t j = 0; j < a.cols(); ++j) p.add_term(labels[j], a(k, j));
        out.basis.push_back(std::move(p));
    }
    // RREF expansion: the coordinate of comps[a] along basis k is its
    // coefficient at the k-th pivot monomial.
    out.expand.assign(comps.size(), std::vector<GaussianRational>(pivots.size()));
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t k = 0; k < pivots.size(); ++k)
            out.expand[i][k] = comps[i].coeff(labels[pivots[k]]);
    return out;
}

inline std::vector<MultiPoly> apply_matrix(const GQMatrix& m, const std::vector<MultiPoly>& v,
                                           std::size_t nvars) {
    if (m.cols() != v.size()) throw shape_mismatch("matrix/tuple shapes");
    std::vector<MultiPoly> out(m.rows(), MultiPoly(nvars));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m(i, j).is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

/// Builds the model tuple [h * z_1, ..., h * z_{rs}, extras..., zero padding]
/// of length `len`.
inline std::vector<MultiPoly> model_tuple(const MultiPoly& h, std::size_t rs,
                                          const std::vector<MultiPoly>& extras,
                                          std::size_t len) {
    const std::size_t n = h.nvars();
    std::vector<MultiPoly> out;
    out.reserve(len);
    for (std::size_t k = 0; k < rs; ++k) out.push_back(h * MultiPoly::variable(n, k));
    for (const auto& p : extras) out.push_back(p);
    while (out.size() < len) out.emplace_back(n);
    if (out.size() != len) throw shape_mismatch("model tuple too long");
    return out;
}

}  // namespace detail

/// Exact certificate check for a quasi-standard decomposition: verifies
///   C^dagger B == H_{r,s,q},  phi_red == B * model(h1),  psi_red == C * model(h2)
/// on the reduced pair (null target components dropped, negative block of psi
/// negated).  Everything is checked with exact arithmetic; no tolerance.
inline bool check_decomposition(const PolyMapPair& pair, const Decomposition& dec) {
    pair.validate();
    const std::size_t rs = std::size_t(pair.source.r) + std::size_t(pair.source.s);
    const std::size_t np = std::size_t(pair.target.r) + std::size_t(pair.target.s);
    if (np < rs) return false;
    const std::size_t q = np - rs;
    if (dec.b.rows() != np || dec.b.cols() != np) return false;
    if (dec.c.rows() != np || dec.c.cols() != np) return false;
    if (dec.phi_extra.size() != q || dec.psi_extra.size() != q) return false;

    if (dec.c.conj_transpose() * dec.b !=
        GQMatrix::signature_gram(pair.source.r, pair.source.s, int(q)))
        return false;

    auto [phired, psired] = detail::reduce_target(pair);
    const std::size_t n = pair.source.n();
    auto m1 = detail::model_tuple(dec.h1, rs, dec.phi_extra, np);
    auto m2 = detail::model_tuple(dec.h2, rs, dec.psi_extra, np);
    if (detail::apply_matrix(dec.b, m1, n) != phired) return false;
    if (detail::apply_matrix(dec.c, m2, n) != psired) return false;
    return true;
}

/// Computes the quasi-standard decomposition of an orthogonal pair whose
/// multiplier has hermitian rank one.  The construction is exact and
/// deterministic: coefficient-extraction functionals at the leading monomials
/// of the rank-one factors solve a lower-triangular system, the remainders
/// span the Phi/Psi blocks, and the certificate is re-verified before return.
inline Decomposition decompose(const PolyMapPair& pair) {
    pair.validate();
    const Signature& src = pair.source;
    const std::size_t rs = std::size_t(src.r) + std::size_t(src.s);
    if (rs == 0) throw degenerate_norm();

    Classification cls = classify(pair);  // throws not_an_orthogonal_pair if needed
    if (cls.kind == PairKind::Null)
        throw not_quasi_standard("pair is null (zero multiplier)");
    if (cls.kind == PairKind::Other)
        throw not_quasi_standard("multiplier has hermitian rank " + std::to_string(cls.rank));

    const std::size_t np = std::size_t(pair.target.r) + std::size_t(pair.target.s);
    if (np < rs)
        throw not_quasi_standard("target too small for source rank");  // unreachable: rank one forces np >= r+s
    const std::size_t q = np - rs;
    const std::size_t n = src.n();

    auto fac = rank_one_factor(cls.mult);
    if (!fac) throw genericity_failure("rank-one factorization failed after rank check");
    const MultiPoly& h1 = fac->h1;
    const MultiPoly& h2 = fac->h2;

    auto [phired, psired] = detail::reduce_target(pair);

    // l_k . phi = h1 * z_k, built from coefficient rows of psi* at lead(h2*) * z_k.
    std::vector<MultiPoly> psistar;
    psistar.reserve(np);
    for (const auto& p : psired) psistar.push_back(p.conj_coeffs());
    auto lrows = detail::extraction_rows(psistar, h2.conj_coeffs(), src);

    // m*_k . psi* = h2* * y_k, built from coefficient rows of phi at lead(h1) * z_k.
    auto mrows = detail::extraction_rows(phired, h1, src);

    // Columns b_j = eps_j m*_j^T and c_k = eps_k conj(l_k)^T; then
    // l_k . b_j = delta_kj and c_k^dagger b_j = eps_k delta_kj.
    GQMatrix b(np, np), c(np, np);
    for (std::size_t j = 0; j < rs; ++j) {
        const GaussianRational w{src.weight(j)};
        for (std::size_t a = 0; a < np; ++a) {
            b(a, j) = w * mrows[j][a];
            c(a, j) = w * lrows[j][a].conj();
        }
    }

    // Residuals phi - sum_j b_j h1 z_j span a space of dimension <= q.
    std::vector<MultiPoly> rphi = phired, rpsi = psired;
    for (std::size_t j = 0; j < rs; ++j) {
        const MultiPoly t1 = h1 * MultiPoly::variable(n, j);
        const MultiPoly t2 = h2 * MultiPoly::variable(n, j);
        for (std::size_t a = 0; a < np; ++a) {
            if (!b(a, j).is_zero()) rphi[a] -= b(a, j) * t1;
            if (!c(a, j).is_zero()) rpsi[a] -= c(a, j) * t2;
        }
    }
    auto sphi = detail::span_basis(rphi, n);
    auto spsi = detail::span_basis(rpsi, n);
    if (sphi.basis.size() > q || spsi.basis.size() > q)
        throw genericity_failure("residual span exceeds null block");
    for (std::size_t i = 0; i < sphi.basis.size(); ++i)
        for (std::size_t a = 0; a < np; ++a) b(a, rs + i) = sphi.expand[a][i];
    for (std::size_t i = 0; i < spsi.basis.size(); ++i)
        for (std::size_t a = 0; a < np; ++a) c(a, rs + i) = spsi.expand[a][i];

    Decomposition dec;
    dec.b = std::move(b);
    dec.c = std::move(c);
    dec.h1 = h1;
    dec.h2 = h2;
    dec.phi_extra = sphi.basis;
    dec.phi_extra.resize(q, MultiPoly(n));
    dec.psi_extra = spsi.basis;
    dec.psi_extra.resize(q, MultiPoly(n));
    dec.lambda = Rational(1);

    if (!check_decomposition(pair, dec))
        throw genericity_failure("decomposition certificate failed to verify");
    return dec;
}

/// Quasi-standard decomposition of an orthogonal *map* phi:
///   phi_red = W [h z_1, ..., h z_{r+s}, Phi_1, ..., Phi_q]^T
/// with  W^dagger H_{r',s'} W = lambda * H_{r,s,q}  for a positive rational
/// conformal factor lambda (folded into h, leaving lambda = 1, whenever it is
/// a perfect rational square).  Throws signature_obstruction when the rank-one
/// multiplier is not positive.
struct MapDecomposition {
    GQMatrix w;
    MultiPoly h;
    std::vector<MultiPoly> phi_extra;
    Rational lambda = Rational(1);
};

inline bool check_map_decomposition(const PolyMapPair& pair, const MapDecomposition& dec) {
    pair.validate();
    if (!pair.is_map()) return false;
    const std::size_t rs = std::size_t(pair.source.r) + std::size_t(pair.source.s);
    const std::size_t np = std::size_t(pair.target.r) + std::size_t(pair.target.s);
    if (np < rs || dec.w.rows() != np || dec.w.cols() != np) return false;
    const std::size_t q = np - rs;
    if (dec.phi_extra.size() != q) return false;
    if (dec.lambda.sign() <= 0) return false;

    const GQMatrix ht = GQMatrix::signature_gram(pair.target.r, pair.target.s, 0);
    const GQMatrix hs = GQMatrix::signature_gram(pair.source.r, pair.source.s, int(q));
    if (dec.w.conj_transpose() * ht * dec.w != GaussianRational{dec.lambda} * hs) return false;

    auto [phired, psired] = detail::reduce_target(pair);
    auto m1 = detail::model_tuple(dec.h, rs, dec.phi_extra, np);
    return detail::apply_matrix(dec.w, m1, pair.source.n()) == phired;
}

inline MapDecomposition decompose_map(const PolyMapPair& pair) {
    pair.validate();
    if (!pair.is_map()) throw shape_mismatch("decompose_map requires phi == psi");
    Classification cls = classify(pair);
    if (cls.kind != PairKind::QuasiStandard)
        throw not_quasi_standard(cls.kind == PairKind::Null
                                     ? "map is null (zero multiplier)"
                                     : "multiplier has hermitian rank " + std::to_string(cls.rank));
    // For a genuine quasi-standard map the multiplier must be positive:
    // H = lambda h hbar with lambda > 0.  Indefinite targets can produce
    // negative rank-one multipliers; those maps have no such normal form.
    HermitianSignature hs = hermitian_signature(cls.mult);
    if (hs.pos != 1 || hs.neg != 0)
        throw signature_obstruction("rank-one multiplier is negative");

    Decomposition dec = decompose(pair);
    // h2 = lambda * h1 with lambda the (real, positive) conformal factor.
    const GaussianRational lam = dec.h2.coeff(dec.h1.leading_monomial());
    if (!lam.is_real() || lam.re.sign() <= 0 || dec.h2 != lam * dec.h1)
        throw genericity_failure("map factors are not conformally equal");

    MapDecomposition out;
    out.w = dec.b;
    out.h = dec.h1;
    out.phi_extra = dec.phi_extra;
    out.lambda = lam.re;

    // Fold perfect-square factors into h: h -> rho h, leading W-columns /rho.
    if (auto rho = out.lambda.exact_sqrt()) {
        const GaussianRational inv{Rational(1) / *rho};
        const std::size_t rs = std::size_t(pair.source.r) + std::size_t(pair.source.s);
        for (std::size_t j = 0; j < rs; ++j)
            for (std::size_t a = 0; a < out.w.rows(); ++a) out.w(a, j) = inv * out.w(a, j);
        out.h = GaussianRational{*rho} * out.h;
        out.lambda = Rational(1);
    }

    if (!check_map_decomposition(pair, out))
        throw genericity_failure("map decomposition certificate failed to verify");
    return out;
}

}  // namespace hermrank
