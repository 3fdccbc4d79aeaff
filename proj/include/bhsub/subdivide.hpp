#pragma once

#include <vector>

#include "bhsub/mask.hpp"
#include "bhsub/polygon.hpp"

namespace bhsub {

/// One binary refinement step: the even rule copies every vertex
/// bit-identically, the odd rule applies the mask with cyclic indexing
/// (closed) or index clamping to [0, n-1] (open). A closed polygon needs
/// at least 2m vertices for a half-width-m mask; an open one at least 2.
Polygon subdivide_step(const Polygon& poly, const RationalMask& mask);

/// iters repetitions of subdivide_step; iters = 0 returns the input.
Polygon subdivide(const Polygon& poly, const RationalMask& mask, int iters);

/// Max over fully interior insertions of |inserted - p(t + 1/2)| for the
/// monomial p(t) = t^degree sampled at integers centered on 0. Exact
/// reproduction (degree <= 2m-1) comes out as zero to rounding; the first
/// failing degree is order unity.
double polynomial_reproduction_error(const RationalMask& mask, int degree);

/// Raw sup-norms ||Delta^k (S^n delta)||_inf of the k-th forward
/// differences of the n-times refined delta sequence, for n = 1..max_level
/// and k = 1..max_k. The delta line is treated as an infinite zero
/// sequence (no boundary clamping).
struct FdNormTable {
    int max_level = 0;
    int max_k = 0;
    std::vector<std::vector<double>> raw; ///< raw[n-1][k-1]

    double value(int level, int k) const {
        return raw[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(k - 1)];
    }
    /// Per-level scaled view 2^((2k-4) n) * raw, the quantity whose decay
    /// exponent is compared against 4-k.
    double scaled(int level, int k) const;
    /// Ratio scaled(level+1,k)/scaled(level,k).
    double scaled_ratio(int level, int k) const;
    /// Least-squares decay exponent of the scaled values over
    /// levels [lo, hi]: scaled ~ 2^(-exponent * n).
    double fitted_decay_exponent(int k, int lo, int hi) const;
};

FdNormTable finite_difference_norms(const RationalMask& mask, int max_level, int max_k);

} // namespace bhsub
