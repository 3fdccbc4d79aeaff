#include "bhsub/symbol.hpp"

#include <cmath>
#include <complex>

namespace bhsub {

LaurentSymbol::LaurentSymbol(std::map<int, Rational> coeffs) {
    for (auto& [n, c] : coeffs)
        if (!c.is_zero()) coeffs_.emplace(n, std::move(c));
}

const Rational& LaurentSymbol::at(int exponent) const {
    static const Rational zero;
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? zero : it->second;
}

int LaurentSymbol::min_exponent() const {
    if (empty()) throw invariant_violation("symbol: empty");
    return coeffs_.begin()->first;
}

int LaurentSymbol::max_exponent() const {
    if (empty()) throw invariant_violation("symbol: empty");
    return coeffs_.rbegin()->first;
}

Rational LaurentSymbol::value_at_one() const {
    Rational s;
    for (const auto& [n, c] : coeffs_) s += c;
    return s;
}

LaurentSymbol full_symbol(const RationalMask& mask) {
    std::map<int, Rational> c;
    c.emplace(0, Rational(1));
    for (int k = mask.min_offset(); k <= mask.max_offset(); ++k) c[1 - 2 * k] = mask.at(k);
    return LaurentSymbol(std::move(c));
}

Rational symbol_derivative_at_minus_one(const LaurentSymbol& sym, int k) {
    if (k < 0) throw invalid_input("symbol derivative order must be >= 0");
    Rational acc;
    for (const auto& [n, c] : sym.coefficients()) {
        BigInt falling = 1;
        for (int i = 0; i < k; ++i) falling *= BigInt(n - i);
        if (falling == 0) continue;
        const bool negative = ((n - k) % 2) != 0; // parity of n-k, sign of (-1)^(n-k)
        Rational term = c * Rational(falling);
        acc += negative ? -term : term;
    }
    return acc;
}

int zero_order(const LaurentSymbol& sym) {
    if (sym.empty()) throw invalid_input("zero_order: symbol is identically zero");
    const int cap = 2 * sym.support_width();
    for (int k = 0; k <= cap; ++k)
        if (!symbol_derivative_at_minus_one(sym, k).is_zero()) return k;
    throw invariant_violation("zero_order: no nonzero derivative below the support cap");
}

RegularityCertificate regularity_class(const LaurentSymbol& sym) {
    RegularityCertificate cert;
    cert.zero_order = zero_order(sym);
    if (cert.zero_order < 2)
        throw numeric_error("regularity_class: zero order " + std::to_string(cert.zero_order) +
                            " < 2, scheme not convergent under the CDM criterion");
    cert.regularity_m = cert.zero_order - 2;
    for (int k = 0; k <= cert.zero_order; ++k)
        cert.derivative_table.emplace_back(k, symbol_derivative_at_minus_one(sym, k));
    cert.sharp = !cert.derivative_table.back().second.is_zero();
    cert.cdm_conditional = true;
    return cert;
}

std::vector<std::pair<double, double>> symbol_magnitude(const LaurentSymbol& sym, int n_samples) {
    if (n_samples < 2) throw invalid_input("symbol_magnitude: need at least 2 samples");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n_samples; ++i) {
        const double w = pi * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [n, c] : sym.coefficients())
            acc += c.to_double() * std::exp(std::complex<double>(0.0, w * n));
        out.emplace_back(w, std::abs(acc));
    }
    return out;
}

} // namespace bhsub
