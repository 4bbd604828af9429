#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "pairs.hpp"
#include "rng.hpp"

namespace hermrank {

using CPoint = std::vector<std::complex<double>>;

inline std::complex<double> eval_c(const MultiPoly& p, const CPoint& x) {
    if (x.size() != p.nvars()) throw variable_count_mismatch();
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> t = c.to_complex();
        for (std::size_t i = 0; i < p.nvars(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= x[i];
        acc += t;
    }
    return acc;
}

/// One floating-point point (x, y) on the incidence variety <x, y>_sig = 0:
/// coordinates are drawn uniformly from the complex unit box and the
/// nondegenerate coordinate of y with the largest pivot is solved for, which
/// keeps the sample numerically well conditioned.  Requires r+s >= 1.
inline std::pair<CPoint, CPoint> sample_incidence(const Signature& sig, SplitMix64& rng) {
    const std::size_t rs = std::size_t(sig.r) + std::size_t(sig.s);
    if (rs == 0) throw degenerate_norm();
    const std::size_t n = sig.n();
    CPoint x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = {rng.symmetric(), rng.symmetric()};
        y[k] = {rng.symmetric(), rng.symmetric()};
    }
    std::size_t pivot = 0;
    for (std::size_t k = 1; k < rs; ++k)
        if (std::abs(x[k]) > std::abs(x[pivot])) pivot = k;
    // Solve sum_k eps_k x_k conj(y_k) = 0 for conj(y_pivot).
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < rs; ++k) {
        if (k == pivot) continue;
        acc += double(sig.weight(k)) * x[k] * std::conj(y[k]);
    }
    const std::complex<double> cyp = -acc / (double(sig.weight(pivot)) * x[pivot]);
    y[pivot] = std::conj(cyp);
    return {std::move(x), std::move(y)};
}

/// Outcome of a randomized floating-point orthogonality check.
struct SampleReport {
    int trials = 0;
    int failures = 0;
    double max_residual = 0.0;
    double tol = 1e-9;
    std::uint64_t seed = 0;
};

/// Samples incidence points and evaluates the weighted pairing at each; the
/// residual is normalized by 1 + |phi(x)| |psi(y)| so the verdict is scale
/// free.  Exact arithmetic remains authoritative; this is a cross-check.
inline SampleReport numeric_verify(const PolyMapPair& pair, int trials = 200,
                                   double tol = 1e-9, std::uint64_t seed = 0) {
    pair.validate();
    SampleReport rep;
    rep.trials = trials;
    rep.tol = tol;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng = derive_stream(seed, std::uint64_t(t));
        auto [x, y] = sample_incidence(pair.source, rng);
        std::complex<double> val{0.0, 0.0};
        double nphi = 0.0, npsi = 0.0;
        for (std::size_t j = 0; j < pair.phi.size(); ++j) {
            const std::complex<double> fx = eval_c(pair.phi[j], x);
            const std::complex<double> gy = eval_c(pair.psi[j], y);
            val += double(pair.target.weight(j)) * fx * std::conj(gy);
            nphi += std::norm(fx);
            npsi += std::norm(gy);
        }
        const double residual = std::abs(val) / (1.0 + std::sqrt(nphi) * std::sqrt(npsi));
        if (residual > rep.max_residual) rep.max_residual = residual;
        if (!(residual <= tol)) ++rep.failures;
    }
    return rep;
}

}  // namespace hermrank
