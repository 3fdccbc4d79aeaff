#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bhsub/mask.hpp"
#include "bhsub/rational.hpp"

namespace bhsub {

/// Finitely supported Laurent polynomial a(z) = sum_n c_n z^n with exact
/// rational coefficients. For the full symbol of an interpolatory scheme
/// the coefficient at exponent 0 is 1 and a(1) = 2.
class LaurentSymbol {
public:
    LaurentSymbol() = default;
    explicit LaurentSymbol(std::map<int, Rational> coeffs);

    const Rational& at(int exponent) const;
    const std::map<int, Rational>& coefficients() const { return coeffs_; }

    bool empty() const { return coeffs_.empty(); }
    int min_exponent() const;
    int max_exponent() const;
    int support_width() const { return empty() ? 0 : max_exponent() - min_exponent() + 1; }

    /// Exact value a(1) = sum of coefficients.
    Rational value_at_one() const;

private:
    std::map<int, Rational> coeffs_; // zero entries dropped
};

/// Symbol of the full binary scheme: the even rule contributes coefficient
/// 1 at exponent 0 and the odd-rule weight a_k lands at exponent 1 - 2k.
/// For the biharmonic 6-point mask this is
/// 1 + alpha(z + z^-1) + beta(z^3 + z^-3) + gamma(z^5 + z^-5).
LaurentSymbol full_symbol(const RationalMask& mask);

/// Exact derivative value a^(k)(-1) = sum_n c_n [prod_{i=0}^{k-1}(n-i)] (-1)^{n-k}.
Rational symbol_derivative_at_minus_one(const LaurentSymbol& sym, int k);

/// Smallest k with a^(k)(-1) != 0, found by exact iteration. The search is
/// capped at twice the support width: a symbol cannot vanish to higher
/// order than its coefficient count allows.
int zero_order(const LaurentSymbol& sym);

/// Regularity classification of a symbol under the CDM criterion.
/// The smoothness class itself is conditional on that criterion
/// (cdm_conditional is always true); the factorization facts
/// (zero order, derivative table, sharpness) are exact.
struct RegularityCertificate {
    int zero_order = 0;     ///< order of the (1+z) factor at z = -1
    int regularity_m = 0;   ///< C^m class, m = zero_order - 2
    bool sharp = false;     ///< a^(zero_order)(-1) != 0
    bool cdm_conditional = true;
    std::vector<std::pair<int, Rational>> derivative_table; ///< k = 0..zero_order
};

/// Throws numeric_error when the zero order is < 2 (scheme not convergent
/// under this criterion).
RegularityCertificate regularity_class(const LaurentSymbol& sym);

/// |a(e^{i w})| sampled at n_samples points over w in [0, pi], in doubles.
/// The only floating-point computation in this module; everything feeding
/// the certificate stays exact.
std::vector<std::pair<double, double>> symbol_magnitude(const LaurentSymbol& sym, int n_samples);

} // namespace bhsub
