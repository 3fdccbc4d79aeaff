#pragma once

#include <string>
#include <vector>

#include "bhsub/rational.hpp"

namespace bhsub {

enum class SchemeId { dgl4, bh6, bh8 };

SchemeId parse_scheme_id(const std::string& name);
std::string scheme_name(SchemeId id);

/// Symmetric interpolatory insertion mask with exact rational weights.
///
/// Coefficients are keyed by neighbour offset k in {-(m-1), ..., m}: the
/// odd rule inserts between p_j and p_{j+1} as q_{2j+1} = sum_k a_k p_{j+k}.
/// Invariants: midpoint symmetry a_k == a_{1-k}, partition of unity
/// sum_k a_k == 1, support size exactly 2m.
class RationalMask {
public:
    /// coeffs[i] is the weight at offset k = 1 - m + i. Throws
    /// invalid_input when the symmetry or sum invariant fails.
    static RationalMask from_coefficients(std::string name, std::vector<Rational> coeffs);

    int half_width() const { return half_width_; }
    int min_offset() const { return 1 - half_width_; }
    int max_offset() const { return half_width_; }
    int support_size() const { return 2 * half_width_; }
    const std::string& name() const { return name_; }

    /// Weight at offset k; exact zero outside the support.
    const Rational& at(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    std::vector<double> coefficients_as_double() const;

    /// Coefficients rendered as "n/d" over the least common denominator,
    /// the presentation used by the mask tables ("150/256" rather than the
    /// reduced "75/128").
    std::vector<std::string> coefficients_common_denominator() const;

    friend bool operator==(const RationalMask& a, const RationalMask& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    RationalMask(std::string name, std::vector<Rational> coeffs, int m)
        : name_(std::move(name)), coeffs_(std::move(coeffs)), half_width_(m) {}

    std::string name_;
    std::vector<Rational> coeffs_;
    int half_width_ = 0;
};

/// The built-in masks of the reference table: the 4-point DGL mask
/// [-1,9,9,-1]/16, the biharmonic 6-point mask [3,-25,150,150,-25,3]/256
/// and the degree-7 8-point mask [-5,49,-245,1225,1225,-245,49,-5]/2048.
RationalMask builtin_mask(SchemeId id);

/// Unique symmetric (2m)-point interpolatory mask satisfying the even-order
/// sum rules n = 0, 2, ..., 2m-2, obtained by an exact solve of the m x m
/// system. Reproduces polynomials of degree <= 2m-1.
///
/// m >= 2 is accepted: the same construction at m = 2 reproduces the DGL
/// mask, which unifies testing (the hierarchy definition itself starts at
/// m = 3). Throws singular_matrix if the system degenerates.
RationalMask derive_hierarchy_mask(int m);

/// One exact sum-rule comparison sum_k a_k k^n against (1/2)^n.
struct SumRuleReport {
    int degree = 0;
    Rational lhs;
    Rational rhs;
    bool satisfied = false;
};

std::vector<SumRuleReport> verify_sum_rules(const RationalMask& mask, int max_degree);

} // namespace bhsub
