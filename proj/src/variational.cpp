#include "bhsub/variational.hpp"

#include "bhsub/mask.hpp"

namespace bhsub {

namespace {

// Lagrange basis L_i(t) through nodes {-2,...,3}, evaluated exactly.
std::array<Rational, 6> lagrange_row_at(const Rational& t) {
    std::array<Rational, 6> row;
    for (int i = 0; i < 6; ++i) {
        const int xi = i - 2;
        Rational v(1);
        for (int j = 0; j < 6; ++j) {
            if (j == i) continue;
            const int xj = j - 2;
            v *= (t - Rational(xj)) / Rational(xi - xj);
        }
        row[static_cast<std::size_t>(i)] = v;
    }
    return row;
}

} // namespace

const std::array<std::array<Rational, 6>, 4>& lagrange_insertion_rows() {
    static const std::array<std::array<Rational, 6>, 4> rows = {
        lagrange_row_at(Rational(-3, 2)), lagrange_row_at(Rational(-1, 2)),
        lagrange_row_at(Rational(3, 2)), lagrange_row_at(Rational(5, 2))};
    return rows;
}

const std::array<std::array<double, 6>, 4>& lagrange_insertion_rows_double() {
    static const std::array<std::array<double, 6>, 4> rows = [] {
        std::array<std::array<double, 6>, 4> out{};
        const auto& exact = lagrange_insertion_rows();
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t i = 0; i < 6; ++i) out[r][i] = exact[r][i].to_double();
        return out;
    }();
    return rows;
}

AppendixReport appendix_verification() {
    AppendixReport rep;
    rep.lagrange_rows = lagrange_insertion_rows();

    // Extract every linear form as a coefficient row by evaluating it on
    // the six basis windows.
    std::array<std::array<Rational, 6>, 4> b{};
    std::array<Rational, 6> comb{};
    std::array<Rational, 6> minimiser{};
    for (int slot = 0; slot < 6; ++slot) {
        SixPointWindow<Rational> w{};
        w[static_cast<std::size_t>(slot)] = Rational(1);

        const auto rows = lagrange_insertion_rows();
        const Rational qB = detail::dot_row(rows[1], w);
        const Rational qC = detail::dot_row(rows[2], w);
        const Rational b43 = Rational(12) * qB - Rational(12) * w[2] - Rational(4) * w[1];
        const Rational b54 = Rational(4) * w[3] + Rational(12) * w[2] - Rational(4) * qB;
        const Rational b65 = Rational(4) * qC - Rational(12) * w[3] - Rational(4) * w[2];
        const Rational b76 = Rational(4) * w[4] - Rational(12) * qC + Rational(12) * w[3];
        const std::array<Rational, 4> bs = {b43, b54, b65, b76};
        for (std::size_t r = 0; r < 4; ++r) b[r][static_cast<std::size_t>(slot)] = bs[r];

        const Rational c = Rational(4) * b43 - Rational(12) * b54 + Rational(12) * b65 -
                           Rational(4) * b76;
        comb[static_cast<std::size_t>(slot)] = c;
        minimiser[static_cast<std::size_t>(slot)] =
            variational_minimiser<Rational>(w);
    }
    rep.b_rows = b;
    rep.combined = comb;
    rep.minimiser_row = minimiser;
    rep.sum_a_sq = Rational(4 * 4 + 12 * 12 + 12 * 12 + 4 * 4);

    // Reference text's printed integer vectors (over denominator 256).
    struct Printed {
        const char* name;
        const std::array<Rational, 6>* recomputed;
        std::array<long long, 6> printed;
    };
    const RationalMask bh6 = builtin_mask(SchemeId::bh6);
    std::array<Rational, 6> bh6_row{};
    for (int k = -2; k <= 3; ++k) bh6_row[static_cast<std::size_t>(k + 2)] = bh6.at(k);

    const std::array<Printed, 6> printed = {{
        {"b43", &rep.b_rows[0], {-336, 0, 288, -1344, 432, -64}},
        {"b54", &rep.b_rows[1], {28, -420, 2232, 1304, -84, 12}},
        {"b65", &rep.b_rows[2], {-12, 84, -1304, -2232, 420, -28}},
        {"b76", &rep.b_rows[3], {36, -252, 840, 552, -236, 84}},
        {"combined", &rep.combined, {-1920, 6400, -38400, -38400, 6400, -1920}},
        {"minimiser", &rep.minimiser_row, {3, -25, 150, 150, -25, 3}},
    }};
    for (const auto& item : printed) {
        for (int i = 0; i < 6; ++i) {
            const Rational want(item.printed[static_cast<std::size_t>(i)], 256);
            const Rational& got = (*item.recomputed)[static_cast<std::size_t>(i)];
            if (!(got == want))
                rep.mismatches.push_back({item.name, i, got, want});
        }
    }
    rep.printed_constants_match = rep.mismatches.empty();

    // Internal chain identities: minimiser = -combined/320, row sums match
    // the constant-window requirement, and the final row is the bh6 mask.
    bool chain_ok = true;
    for (int i = 0; i < 6; ++i) {
        const auto s = static_cast<std::size_t>(i);
        if (!(minimiser[s] == -(comb[s] / rep.sum_a_sq))) chain_ok = false;
        if (!(minimiser[s] == bh6_row[s])) chain_ok = false;
    }
    rep.theorem_verified = chain_ok;
    return rep;
}

} // namespace bhsub
