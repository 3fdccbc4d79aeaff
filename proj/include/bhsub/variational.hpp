#pragma once

#include <array>
#include <string>
#include <vector>

#include "bhsub/rational.hpp"

namespace bhsub {

/// Six reference scalars at integer positions -2..3.
template <typename T>
using SixPointWindow = std::array<T, 6>;

/// Exact degree-5 Lagrange coefficient rows through nodes {-2,...,3},
/// evaluated at the four half-integer insertion positions -3/2, -1/2,
/// 3/2, 5/2 (in that order). Computed from the Lagrange basis, not from
/// stored constants, so the minimiser derivation stays non-circular.
const std::array<std::array<Rational, 6>, 4>& lagrange_insertion_rows();

/// Same rows converted to double once.
const std::array<std::array<double, 6>, 4>& lagrange_insertion_rows_double();

namespace detail {
template <typename T>
inline T dot_row(const std::array<Rational, 6>& row, const SixPointWindow<T>& w) {
    T acc = T(0);
    for (int i = 0; i < 6; ++i) {
        if constexpr (std::is_same_v<T, Rational>)
            acc += row[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
        else
            acc += row[static_cast<std::size_t>(i)].to_double() * w[static_cast<std::size_t>(i)];
    }
    return acc;
}
} // namespace detail

/// The four fixed half-integer insertions (q_A, q_B, q_C, q_D).
template <typename T>
std::array<T, 4> lagrange_half_insertions(const SixPointWindow<T>& w) {
    const auto& rows = lagrange_insertion_rows();
    return {detail::dot_row(rows[0], w), detail::dot_row(rows[1], w),
            detail::dot_row(rows[2], w), detail::dot_row(rows[3], w)};
}

/// Discrete curvature-variation energy of the refined segment
/// x = (p_-2, q_A, p_-1, q_B, p_0, q, p_1, q_C, p_2, q_D, p_3) with
/// kappa_k = 4(x_{k+1} - 2 x_k + x_{k-1}) (spacing 1/2). Strictly convex
/// quadratic in q with leading coefficient sum a_k^2 = 320.
template <typename T>
T discrete_energy(const T& q, const SixPointWindow<T>& w) {
    const auto ins = lagrange_half_insertions(w);
    const std::array<T, 11> x = {w[0], ins[0], w[1], ins[1], w[2], q,
                                 w[3], ins[2], w[4], ins[3], w[5]};
    std::array<T, 5> kappa{}; // kappa_3 .. kappa_7
    for (int k = 3; k <= 7; ++k) {
        const auto i = static_cast<std::size_t>(k);
        kappa[static_cast<std::size_t>(k - 3)] =
            T(4) * (x[i + 1] - T(2) * x[i] + x[i - 1]);
    }
    T e = T(0);
    for (int k = 0; k < 4; ++k) {
        const T d = kappa[static_cast<std::size_t>(k + 1)] - kappa[static_cast<std::size_t>(k)];
        e += d * d;
    }
    return e;
}

/// Unique minimiser q* = -(sum a_k b_k) / (sum a_k^2) of the discrete
/// energy, computed through the curvature-difference decomposition
/// (not by applying a stored stencil row). Equals the biharmonic 6-point
/// mask applied to the window.
template <typename T>
T variational_minimiser(const SixPointWindow<T>& w) {
    const auto& rows = lagrange_insertion_rows();
    const T qB = detail::dot_row(rows[1], w);
    const T qC = detail::dot_row(rows[2], w);
    // Delta_43 = 4q + b43 etc., with a = (4, -12, 12, -4).
    const T b43 = T(12) * qB - T(12) * w[2] - T(4) * w[1];
    const T b54 = T(4) * w[3] + T(12) * w[2] - T(4) * qB;
    const T b65 = T(4) * qC - T(12) * w[3] - T(4) * w[2];
    const T b76 = T(4) * w[4] - T(12) * qC + T(12) * w[3];
    const T numerator = T(4) * b43 - T(12) * b54 + T(12) * b65 - T(4) * b76;
    return -(numerator / T(320));
}

/// One entry of the comparison against the reference text's printed
/// integer vectors.
struct AppendixComparison {
    std::string vector_name;
    int index = 0;       ///< coefficient slot 0..5 (p_-2 .. p_3)
    Rational recomputed; ///< exact recomputation
    Rational printed;    ///< value as printed in the reference text
};

/// Result of recomputing the full Theorem-1 verification chain
/// symbolically over the six basis windows.
struct AppendixReport {
    std::array<std::array<Rational, 6>, 4> lagrange_rows; ///< q_A, q_B, q_C, q_D
    std::array<std::array<Rational, 6>, 4> b_rows;        ///< b43, b54, b65, b76
    std::array<Rational, 6> combined;  ///< 4 b43 - 12 b54 + 12 b65 - 4 b76
    std::array<Rational, 6> minimiser_row;
    Rational sum_a_sq;         ///< 16 + 144 + 144 + 16
    bool theorem_verified = false;  ///< minimiser row equals the bh6 mask row and
                                    ///< the internal identities hold
    std::vector<AppendixComparison> mismatches; ///< recomputed vs printed
    bool printed_constants_match = false;
};

AppendixReport appendix_verification();

} // namespace bhsub
