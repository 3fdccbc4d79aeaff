#include "bhsub/linsolve.hpp"

#include <cstddef>

namespace bhsub {

RationalVector rat_linsolve(RationalMatrix A, RationalVector b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw invalid_input("rat_linsolve: size mismatch between A and b");
    for (const auto& row : A)
        if (row.size() != m) throw invalid_input("rat_linsolve: matrix is not square");

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && A[piv][col].is_zero()) ++piv;
        if (piv == m) throw singular_matrix("rat_linsolve: rank-deficient matrix");
        if (piv != col) {
            std::swap(A[piv], A[col]);
            std::swap(b[piv], b[col]);
        }
        const Rational inv_piv = Rational(1) / A[col][col];
        for (std::size_t j = col; j < m; ++j) A[col][j] *= inv_piv;
        b[col] *= inv_piv;
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || A[row][col].is_zero()) continue;
            const Rational f = A[row][col];
            for (std::size_t j = col; j < m; ++j) A[row][j] -= f * A[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

} // namespace bhsub
