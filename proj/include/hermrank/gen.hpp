#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "pairs.hpp"
#include "rng.hpp"

namespace hermrank {

/// Retry budget for rejection sampling; overridable via HERMRANK_MAX_RETRIES.
inline int max_retries() {
    if (const char* env = std::getenv("HERMRANK_MAX_RETRIES")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1000;
}

/// Knobs for the random generators.  All draws are functions of `seed` alone.
struct GenConfig {
    std::uint64_t seed = 0;
    Signature source;
    Signature target;
    int max_degree = 2;    // components have degree <= max_degree
    int coeff_height = 4;  // |numerators| and denominators <= coeff_height
};

inline Rational random_rational(SplitMix64& rng, int height) {
    if (height < 1) throw invalid_signature("coefficient height must be >= 1");
    return Rational(rng.range(-height, height), rng.range(1, height));
}

inline GaussianRational random_gq(SplitMix64& rng, int height) {
    return {random_rational(rng, height), random_rational(rng, height)};
}

/// Integer-entry Gaussian rational; preferred for matrices and subspaces.
inline GaussianRational random_gq_int(SplitMix64& rng, int height) {
    if (height < 1) throw invalid_signature("coefficient height must be >= 1");
    return {Rational(rng.range(-height, height)), Rational(rng.range(-height, height))};
}

/// All monomials of the exact total degree d, in no particular order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(nvars, 0);
    // Depth-first distribution of d among the variables.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.emplace_back(e);
            e[i] = 0;
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.emplace_back(e);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

/// Random homogeneous polynomial of degree d; roughly half the monomials get
/// a nonzero coefficient.  With `nonzero` the zero draw is rejected.
inline MultiPoly random_homogeneous(SplitMix64& rng, std::size_t nvars, unsigned d, int height,
                                    bool nonzero) {
    const auto mons = monomials_of_degree(nvars, d);
    const int budget = max_retries();
    for (int attempt = 0; attempt < budget; ++attempt) {
        MultiPoly p(nvars);
        for (const auto& m : mons)
            if (rng.coin()) p.add_term(m, random_gq(rng, height));
        if (!nonzero || !p.is_zero()) return p;
    }
    throw generation_exhausted("random homogeneous polynomial kept drawing zero");
}

inline GQMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, int height) {
    GQMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_gq_int(rng, height);
    return m;
}

inline GQMatrix random_invertible(SplitMix64& rng, std::size_t n, int height) {
    const int budget = max_retries();
    for (int attempt = 0; attempt < budget; ++attempt) {
        GQMatrix m = random_matrix(rng, n, n, height);
        if (!determinant(m).is_zero()) return m;
    }
    throw generation_exhausted("random matrix kept drawing singular");
}

/// The generalized Whitney pair on source (r,s,0): n' = 2(r+s) - 2 degree-two
/// components into the definite target (n',0,0), with psi = -phi exactly on
/// the components that cross the negative source block.  It is orthogonal
/// (the pairing is (x1 y1 + xn yn) times the source norm form) but *not*
/// quasi-standard: the multiplier |z_1|^2 + |z_n|^2 has hermitian rank two.
inline PolyMapPair whitney(int r, int s) {
    if (r < 1 || s < 1) throw invalid_signature("whitney pair needs r >= 1 and s >= 1");
    const std::size_t n = std::size_t(r) + std::size_t(s);
    PolyMapPair pair;
    pair.source = Signature(r, s, 0);
    pair.target = Signature(int(2 * n - 2), 0, 0);
    auto z = [&](std::size_t k) { return MultiPoly::variable(n, k); };
    auto push = [&](const MultiPoly& p, bool flip) {
        pair.phi.push_back(p);
        pair.psi.push_back(flip ? -p : p);
    };
    // Four index ranges (1-based j): z1*z_j for j <= n-1 with a sign flip
    // past the positive block, then z_n*z_j for 2 <= j <= n likewise.
    for (int j = 1; j <= int(n) - 1; ++j) push(z(0) * z(std::size_t(j) - 1), j > r);
    for (int j = 2; j <= int(n); ++j) push(z(n - 1) * z(std::size_t(j) - 1), j > r);
    pair.validate();
    return pair;
}

/// Random quasi-standard pair with a null block of size q, together with the
/// witness decomposition it was built from.  The target must be the definite
/// (r+s+q, 0, 0) or left default-initialized, in which case it is derived.
inline std::pair<PolyMapPair, Decomposition> quasi_standard(const GenConfig& cfg, int q) {
    if (q < 0) throw invalid_signature("null block size must be >= 0");
    const std::size_t rs = std::size_t(cfg.source.r) + std::size_t(cfg.source.s);
    if (rs == 0) throw degenerate_norm();
    const std::size_t np = rs + std::size_t(q);
    const Signature target(int(np), 0, 0);
    if (cfg.target != Signature() && cfg.target != target)
        throw invalid_signature("target must be (" + std::to_string(np) + ",0,0)");
    if (cfg.max_degree < 1) throw invalid_signature("max_degree must be >= 1");
    const std::size_t n = cfg.source.n();

    SplitMix64 rng(cfg.seed);
    // B random invertible; C is then forced by the certificate:
    // C^dagger B = H_{r,s,q}  <=>  C = (B^dagger)^{-1} H_{r,s,q}.
    const GQMatrix b = random_invertible(rng, np, cfg.coeff_height);
    const GQMatrix h = GQMatrix::signature_gram(cfg.source.r, cfg.source.s, q);
    auto binv = inverse(b);
    if (!binv) throw genericity_failure("invertible draw failed to invert");
    const GQMatrix c = binv->conj_transpose() * h;

    const unsigned d1 = unsigned(rng.range(0, cfg.max_degree - 1));
    const unsigned d2 = unsigned(rng.range(0, cfg.max_degree - 1));
    Decomposition dec;
    dec.b = b;
    dec.c = c;
    dec.h1 = random_homogeneous(rng, n, d1, cfg.coeff_height, true);
    dec.h2 = random_homogeneous(rng, n, d2, cfg.coeff_height, true);
    for (int i = 0; i < q; ++i)
        dec.phi_extra.push_back(random_homogeneous(rng, n, d1 + 1, cfg.coeff_height, false));
    for (int i = 0; i < q; ++i)
        dec.psi_extra.push_back(random_homogeneous(rng, n, d2 + 1, cfg.coeff_height, false));
    dec.lambda = Rational(1);

    PolyMapPair pair;
    pair.source = cfg.source;
    pair.target = target;
    pair.phi = detail::apply_matrix(b, detail::model_tuple(dec.h1, rs, dec.phi_extra, np), n);
    pair.psi = detail::apply_matrix(c, detail::model_tuple(dec.h2, rs, dec.psi_extra, np), n);
    pair.validate();
    return {std::move(pair), std::move(dec)};
}

/// Random null pair: phi and psi have disjoint component supports, so the
/// weighted pairing vanishes identically.  phi occupies the leading half of
/// the target components, psi the trailing half (all of it weight-0 when the
/// target is a single null direction).
inline PolyMapPair null_pair(const GenConfig& cfg) {
    const std::size_t n = cfg.source.n();
    const std::size_t np = cfg.target.n();
    if (n == 0) throw invalid_signature("empty source");
    std::size_t split;
    if (np >= 2) {
        split = (np + 1) / 2;
    } else if (np == 1 && cfg.target.t >= 1) {
        split = 1;  // the only component is null-weighted; no constraint at all
    } else {
        throw invalid_signature("cannot split supports in a 1-dimensional nondegenerate target");
    }
    if (cfg.max_degree < 1) throw invalid_signature("max_degree must be >= 1");
    SplitMix64 rng(cfg.seed);
    const unsigned dphi = unsigned(rng.range(1, cfg.max_degree));
    const unsigned dpsi = unsigned(rng.range(1, cfg.max_degree));
    PolyMapPair pair;
    pair.source = cfg.source;
    pair.target = cfg.target;
    pair.phi.assign(np, MultiPoly(n));
    pair.psi.assign(np, MultiPoly(n));
    for (std::size_t j = 0; j < split; ++j)
        pair.phi[j] = random_homogeneous(rng, n, dphi, cfg.coeff_height, j == 0);
    for (std::size_t j = split; j < np; ++j)
        pair.psi[j] = random_homogeneous(rng, n, dpsi, cfg.coeff_height, j == split);
    if (np == 1) pair.psi[0] = random_homogeneous(rng, n, dpsi, cfg.coeff_height, true);
    pair.validate();
    return pair;
}

/// Same pair viewed on a source with `extra` more null directions appended.
inline PolyMapPair extend_with_null_vars(const PolyMapPair& pair, int extra) {
    if (extra < 0) throw invalid_signature("cannot remove variables");
    pair.validate();
    PolyMapPair out;
    out.source = Signature(pair.source.r, pair.source.s, pair.source.t + extra);
    out.target = pair.target;
    for (const auto& p : pair.phi) out.phi.push_back(p.widened(std::size_t(extra)));
    for (const auto& p : pair.psi) out.psi.push_back(p.widened(std::size_t(extra)));
    return out;
}

/// Random n x (a+b) matrix S whose columns span a subspace on which the
/// standard (r,s,t) form has exact signature (a, b): the first a columns have
/// positive self-pairing, the next b negative, and all columns are mutually
/// orthogonal.  With `coordinate` set, returns the standard coordinate
/// subspace (first a positive and first b negative basis vectors) regardless
/// of the seed.  The result is re-verified by congruence before returning.
inline GQMatrix random_subspace(const Signature& sig, int a, int b, std::uint64_t seed,
                                bool coordinate = false) {
    if (a < 0 || b < 0 || a > sig.r || b > sig.s || a + b < 1)
        throw invalid_signature("requested subspace signature is not embeddable");
    const std::size_t n = sig.n();
    const std::size_t m = std::size_t(a) + std::size_t(b);
    GQMatrix s(n, m);
    if (coordinate) {
        for (int i = 0; i < a; ++i) s(std::size_t(i), std::size_t(i)) = 1;
        for (int i = 0; i < b; ++i) s(std::size_t(sig.r + i), std::size_t(a + i)) = 1;
        return s;
    }

    SplitMix64 rng(seed);
    // Weighted pairing <u, v> = sum_k eps_k u_k conj(v_k).
    auto form = [&](const std::vector<GaussianRational>& u,
                    const std::vector<GaussianRational>& v) {
        GaussianRational acc{0};
        for (std::size_t k = 0; k < n; ++k) {
            const int w = sig.weight(k);
            if (w != 0 && !u[k].is_zero() && !v[k].is_zero())
                acc += GaussianRational{w} * u[k] * v[k].conj();
        }
        return acc;
    };

    std::vector<std::vector<GaussianRational>> cols;
    const int budget = max_retries();
    int attempts = 0;
    while (cols.size() < m) {
        if (++attempts > budget) throw generation_exhausted("subspace sampling exhausted retries");
        const bool want_positive = cols.size() < std::size_t(a);
        std::vector<GaussianRational> u(n);
        for (std::size_t k = 0; k < n; ++k) u[k] = random_gq_int(rng, 2);
        // Bias the draw toward the block with the sign we still need; pure
        // random draws can stall when the other block dominates.
        const std::size_t base = want_positive ? 0 : std::size_t(sig.r);
        const std::size_t block = want_positive ? std::size_t(sig.r) : std::size_t(sig.s);
        u[base + (std::uint64_t(attempts) % block)] += GaussianRational{long(4)};
        // Project against the accepted columns (indefinite Gram-Schmidt).
        for (const auto& v : cols) {
            const GaussianRational coeff = form(u, v) / form(v, v);
            for (std::size_t k = 0; k < n; ++k) u[k] -= coeff * v[k];
        }
        const GaussianRational norm = form(u, u);
        if (!norm.is_real()) throw genericity_failure("self-pairing not real");
        if (want_positive ? norm.re.sign() > 0 : norm.re.sign() < 0) cols.push_back(std::move(u));
    }
    for (std::size_t j = 0; j < m; ++j) s.set_col(j, cols[j]);

    // Certify: the pulled-back Gram matrix must diagonalize with exactly
    // (a, b) signs and no null directions.
    GQMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram(i, j) = form(cols[j], cols[i]);
    CongruenceResult cr = congruence_diagonalize(gram);
    if (cr.positives != a || cr.negatives != b || cr.positives + cr.negatives != int(m))
        throw genericity_failure("sampled subspace has wrong signature");
    return s;
}

/// Per-subspace classification of a pair on a degenerate source: restricts
/// the multiplier to `trials` random (r,s)-subspaces and reports the verdict
/// of every trial next to the direct classification.  Deterministic given
/// the seed.
struct RestrictionReport {
    PairKind direct = PairKind::Other;
    std::vector<PairKind> trials;
    int null_count = 0;
    int qs_count = 0;
    int other_count = 0;
    std::uint64_t seed = 0;
};

inline RestrictionReport restriction_classify(const PolyMapPair& pair, int trials,
                                              std::uint64_t seed) {
    pair.validate();
    if (!pair.source.is_degenerate()) throw source_not_degenerate();
    RestrictionReport rep;
    rep.seed = seed;
    rep.direct = classify(pair).kind;
    const BiForm h = multiplier(pair);
    for (int i = 0; i < trials; ++i) {
        SplitMix64 sub = derive_stream(seed, std::uint64_t(i));
        const GQMatrix s =
            random_subspace(pair.source, pair.source.r, pair.source.s, sub.next());
        const std::size_t rank = hermitian_rank(restrict_biform(h, s));
        const PairKind kind = rank == 0   ? PairKind::Null
                              : rank == 1 ? PairKind::QuasiStandard
                                          : PairKind::Other;
        rep.trials.push_back(kind);
        if (kind == PairKind::Null) ++rep.null_count;
        else if (kind == PairKind::QuasiStandard) ++rep.qs_count;
        else ++rep.other_count;
    }
    return rep;
}

}  // namespace hermrank
