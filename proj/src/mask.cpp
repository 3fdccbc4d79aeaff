#include "bhsub/mask.hpp"

#include <cstddef>

#include "bhsub/linsolve.hpp"

namespace bhsub {

SchemeId parse_scheme_id(const std::string& name) {
    if (name == "dgl4") return SchemeId::dgl4;
    if (name == "bh6") return SchemeId::bh6;
    if (name == "bh8") return SchemeId::bh8;
    throw invalid_input("unknown scheme id '" + name + "' (expected dgl4, bh6 or bh8)");
}

std::string scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::dgl4: return "dgl4";
        case SchemeId::bh6: return "bh6";
        case SchemeId::bh8: return "bh8";
    }
    throw invalid_input("unknown scheme id");
}

RationalMask RationalMask::from_coefficients(std::string name, std::vector<Rational> coeffs) {
    if (coeffs.empty() || coeffs.size() % 2 != 0)
        throw invalid_input("mask: support size must be a positive even number");
    const int m = static_cast<int>(coeffs.size()) / 2;
    Rational sum;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        // offset of slot i is k = 1 - m + i; its mirror 1 - k sits at the
        // reversed slot.
        if (!(coeffs[i] == coeffs[coeffs.size() - 1 - i]))
            throw invalid_input("mask: coefficients are not midpoint-symmetric");
        sum += coeffs[i];
    }
    if (!(sum == Rational(1)))
        throw invalid_input("mask: coefficients must sum to 1, got " + sum.str());
    return RationalMask(std::move(name), std::move(coeffs), m);
}

const Rational& RationalMask::at(int k) const {
    static const Rational zero;
    if (k < min_offset() || k > max_offset()) return zero;
    return coeffs_[static_cast<std::size_t>(k - min_offset())];
}

std::vector<double> RationalMask::coefficients_as_double() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_double());
    return out;
}

std::vector<std::string> RationalMask::coefficients_common_denominator() const {
    BigInt den = 1;
    for (const auto& c : coeffs_) den = boost::multiprecision::lcm(den, c.den());
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        const BigInt num = c.num() * (den / c.den());
        out.push_back(num.str() + "/" + den.str());
    }
    return out;
}

RationalMask builtin_mask(SchemeId id) {
    auto make = [](const char* name, std::initializer_list<long long> nums, long long den) {
        std::vector<Rational> c;
        for (long long n : nums) c.emplace_back(n, den);
        return RationalMask::from_coefficients(name, std::move(c));
    };
    switch (id) {
        case SchemeId::dgl4:
            return make("dgl4", {-1, 9, 9, -1}, 16);
        case SchemeId::bh6:
            return make("bh6", {3, -25, 150, 150, -25, 3}, 256);
        case SchemeId::bh8:
            return make("bh8", {-5, 49, -245, 1225, 1225, -245, 49, -5}, 2048);
    }
    throw invalid_input("unknown scheme id");
}

RationalMask derive_hierarchy_mask(int m) {
    if (m < 2) throw invalid_input("derive_hierarchy_mask: m must be >= 2");
    // Unknowns u_i = a_i = a_{1-i}, i = 1..m. Row for each even degree
    // n in {0, 2, ..., 2m-2}: sum_i u_i (i^n + (1-i)^n) = (1/2)^n.
    // Odd-degree rules hold automatically by symmetry.
    RationalMatrix A(static_cast<std::size_t>(m));
    RationalVector b(static_cast<std::size_t>(m));
    for (int row = 0; row < m; ++row) {
        const unsigned n = static_cast<unsigned>(2 * row);
        A[static_cast<std::size_t>(row)].resize(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) {
            const Rational ki = Rational(i).pow(n) + Rational(1 - i).pow(n);
            A[static_cast<std::size_t>(row)][static_cast<std::size_t>(i - 1)] = ki;
        }
        b[static_cast<std::size_t>(row)] = Rational(1, 2).pow(n);
    }
    const RationalVector u = rat_linsolve(std::move(A), std::move(b));

    std::vector<Rational> coeffs(static_cast<std::size_t>(2 * m));
    for (int i = 1; i <= m; ++i) {
        coeffs[static_cast<std::size_t>(m - 1 + i)] = u[static_cast<std::size_t>(i - 1)];
        coeffs[static_cast<std::size_t>(m - i)] = u[static_cast<std::size_t>(i - 1)];
    }
    const std::string name = (m == 2) ? "dgl4" : "bh" + std::to_string(2 * m);
    return RationalMask::from_coefficients(name, std::move(coeffs));
}

std::vector<SumRuleReport> verify_sum_rules(const RationalMask& mask, int max_degree) {
    std::vector<SumRuleReport> out;
    out.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        SumRuleReport r;
        r.degree = n;
        for (int k = mask.min_offset(); k <= mask.max_offset(); ++k)
            r.lhs += mask.at(k) * Rational(k).pow(static_cast<unsigned>(n));
        r.rhs = Rational(1, 2).pow(static_cast<unsigned>(n));
        r.satisfied = (r.lhs == r.rhs);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace bhsub
