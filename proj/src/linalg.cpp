#include "nmil/linalg.hpp"

#include <algorithm>

namespace nmil {

namespace {

// Column echelon form over Z via unimodular column operations, tracking the
// transform U with A*U = H.  Returns the number of nonzero columns of H.
int column_echelon(std::vector<IntVec>& A, std::vector<IntVec>& U, int n) {
    int m = static_cast<int>(A.size());
    U.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) U[i][i] = 1;  // U stored column-major: U[j] = column j

    // A is stored row-major; operate on columns.
    auto col_axpy = [&](int dst, int src, const Int& q) {
        // column dst -= q * column src
        for (int r = 0; r < m; ++r) A[r][dst] -= q * A[r][src];
        for (int r = 0; r < n; ++r) U[dst][r] -= q * U[src][r];
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int r = 0; r < m; ++r) std::swap(A[r][a], A[r][b]);
        std::swap(U[a], U[b]);
    };

    int col = 0;
    for (int row = 0; row < m && col < n; ++row) {
        // eliminate within columns col..n-1 on this row
        for (;;) {
            int pivot = -1;
            for (int j = col; j < n; ++j) {
                if (A[row][j] == 0) continue;
                if (pivot < 0 || boost::multiprecision::abs(A[row][j]) <
                                     boost::multiprecision::abs(A[row][pivot]))
                    pivot = j;
            }
            if (pivot < 0) break;  // row already zero on the right
            bool clean = true;
            for (int j = col; j < n; ++j) {
                if (j == pivot || A[row][j] == 0) continue;
                Int q = A[row][j] / A[row][pivot];  // truncated division shrinks remainder
                if (q != 0) col_axpy(j, pivot, q);
                if (A[row][j] != 0) clean = false;
            }
            if (clean) {
                col_swap(col, pivot);
                ++col;
                break;
            }
        }
    }
    return col;
}

}  // namespace

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int n) {
    std::vector<IntVec> A;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw calc_error("integer_kernel: bad row size");
        A.push_back(r);
    }
    if (A.empty()) {
        std::vector<IntVec> basis;
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    std::vector<IntVec> U;
    int r = column_echelon(A, U, n);
    std::vector<IntVec> basis;
    for (int j = r; j < n; ++j) basis.push_back(U[j]);
    return basis;
}

std::vector<IntVec> hermite_basis(const std::vector<IntVec>& vectors, int n) {
    std::vector<IntVec> nonzero;
    for (const auto& v : vectors)
        if (!vec_is_zero(v)) nonzero.push_back(v);
    if (nonzero.empty()) return {};
    auto ker = integer_kernel(nonzero, n);
    return integer_kernel(ker, n);
}

int rank_of(const std::vector<IntVec>& rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    std::vector<RatVec> M;
    for (const auto& r : rows) M.push_back(to_rat(r));
    int rank = 0;
    size_t col = 0;
    for (; col < n && rank < static_cast<int>(M.size()); ++col) {
        int piv = -1;
        for (size_t i = rank; i < M.size(); ++i)
            if (M[i][col] != 0) {
                piv = static_cast<int>(i);
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        for (size_t i = 0; i < M.size(); ++i) {
            if (static_cast<int>(i) == rank || M[i][col] == 0) continue;
            Rat f = M[i][col] / M[rank][col];
            for (size_t j = col; j < n; ++j) M[i][j] -= f * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::optional<RatVec> solve_combination_impl(const std::vector<IntVec>& rows, const RatVec& target) {
    // Find x with sum_i x_i rows[i] = target: Gaussian elimination on the
    // transpose [rows^T | target].
    size_t k = rows.size();
    size_t n = target.size();
    std::vector<RatVec> M(n, RatVec(k + 1, Rat(0)));
    for (size_t j = 0; j < k; ++j) {
        if (rows[j].size() != n) throw calc_error("solve_combination: bad row size");
        for (size_t i = 0; i < n; ++i) M[i][j] = Rat(rows[j][i]);
    }
    for (size_t i = 0; i < n; ++i) M[i][k] = target[i];

    std::vector<int> pivot_col(n, -1);
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(M[rank], M[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            Rat f = M[i][col] / M[rank][col];
            for (size_t j = col; j <= k; ++j) M[i][j] -= f * M[rank][j];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (size_t i = rank; i < n; ++i)
        if (M[i][k] != 0) return std::nullopt;  // inconsistent
    RatVec x(k, Rat(0));
    for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = M[i][k] / M[i][pivot_col[i]];
    return x;
}

}  // namespace

std::optional<RatVec> solve_combination(const std::vector<IntVec>& rows, const IntVec& target) {
    return solve_combination_impl(rows, to_rat(target));
}

std::optional<RatVec> solve_combination_rat(const std::vector<IntVec>& rows, const RatVec& target) {
    return solve_combination_impl(rows, target);
}

RatVec solve_square(const std::vector<RatVec>& rows, const RatVec& rhs) {
    size_t n = rows.size();
    std::vector<RatVec> M(n, RatVec(n + 1));
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n || rhs.size() != n) throw calc_error("solve_square: shape");
        for (size_t j = 0; j < n; ++j) M[i][j] = rows[i][j];
        M[i][n] = rhs[i];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw calc_error("solve_square: singular matrix");
        std::swap(M[col], M[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == col || M[i][col] == 0) continue;
            Rat f = M[i][col] / M[col][col];
            for (size_t j = col; j <= n; ++j) M[i][j] -= f * M[col][j];
        }
    }
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
    return x;
}

Int det(const std::vector<IntVec>& rows) {
    size_t n = rows.size();
    // fraction-free Bareiss
    std::vector<IntVec> M = rows;
    for (const auto& r : M)
        if (r.size() != n) throw calc_error("det: not square");
    Int sign = 1, prev = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            sign = -sign;
        }
        for (size_t i = col + 1; i < n; ++i) {
            for (size_t j = col + 1; j < n; ++j) {
                M[i][j] = (M[i][j] * M[col][col] - M[i][col] * M[col][j]) / prev;
            }
            M[i][col] = 0;
        }
        prev = M[col][col];
    }
    return sign * M[n - 1][n - 1];
}

}  // namespace nmil
