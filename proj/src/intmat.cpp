#include "latkit/intmat.hpp"

#include <algorithm>

namespace latkit {

namespace {

// Shared elimination core; u may be null.
void hnf_eliminate(IntMat& m, IntMat* u) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int fixed = 0;
    for (int col = 0; col < cols && fixed < rows; ++col) {
        // Repeatedly reduce by the row with the smallest nonzero |entry| in
        // this column until a single nonzero entry remains.
        for (;;) {
            int pivot = -1;
            for (int r = fixed; r < rows; ++r) {
                if (m[r][col] == 0) continue;
                if (pivot < 0 || mpz_cmpabs(m[r][col].get_mpz_t(), m[pivot][col].get_mpz_t()) < 0)
                    pivot = r;
            }
            if (pivot < 0) break;  // column clear below `fixed`
            bool others = false;
            for (int r = fixed; r < rows; ++r) {
                if (r == pivot || m[r][col] == 0) continue;
                others = true;
                Int q = floor_div(m[r][col], m[pivot][col]);
                for (int c = 0; c < cols; ++c) m[r][c] -= q * m[pivot][c];
                if (u)
                    for (int c = 0; c < rows; ++c) (*u)[r][c] -= q * (*u)[pivot][c];
            }
            if (!others) {
                std::swap(m[pivot], m[fixed]);
                if (u) std::swap((*u)[pivot], (*u)[fixed]);
                if (m[fixed][col] < 0) {
                    for (Int& x : m[fixed]) x = -x;
                    if (u)
                        for (Int& x : (*u)[fixed]) x = -x;
                }
                // Reduce earlier rows so entries above the pivot are in [0, pivot).
                for (int r = 0; r < fixed; ++r) {
                    Int q = floor_div(m[r][col], m[fixed][col]);
                    if (q == 0) continue;
                    for (int c = 0; c < cols; ++c) m[r][c] -= q * m[fixed][c];
                    if (u)
                        for (int c = 0; c < rows; ++c) (*u)[r][c] -= q * (*u)[fixed][c];
                }
                ++fixed;
                break;
            }
        }
    }
}

}  // namespace

IntMat hnf_rows(IntMat m) {
    hnf_eliminate(m, nullptr);
    IntMat out;
    for (auto& row : m)
        if (!std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; }))
            out.push_back(std::move(row));
    return out;
}

HnfWithTransform hnf_rows_transform(IntMat m) {
    IntMat u = identity_mat(static_cast<int>(m.size()));
    hnf_eliminate(m, &u);
    return {std::move(m), std::move(u)};
}

IntMat integer_kernel(const IntMat& m) {
    auto [h, u] = hnf_rows_transform(m);
    IntMat kernel;
    for (size_t r = 0; r < h.size(); ++r)
        if (std::all_of(h[r].begin(), h[r].end(), [](const Int& x) { return x == 0; }))
            kernel.push_back(u[r]);
    return kernel;
}

Int determinant(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    IntMat a = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::optional<std::vector<Rat>> solve_echelon(const IntMat& basis, const std::vector<Int>& v) {
    const int cols = static_cast<int>(v.size());
    std::vector<Rat> coeffs;
    std::vector<Rat> rem(cols);
    for (int i = 0; i < cols; ++i) rem[i] = v[i];
    for (const auto& row : basis) {
        int p = 0;
        while (p < cols && row[p] == 0) ++p;
        if (p == cols) continue;
        Rat c = rem[p] / Rat(row[p]);
        c.canonicalize();
        coeffs.push_back(c);
        if (c != 0)
            for (int j = p; j < cols; ++j) rem[j] -= c * Rat(row[j]);
    }
    for (const Rat& x : rem)
        if (x != 0) return std::nullopt;
    return coeffs;
}

std::optional<std::vector<int>> solve_mod2(const IntMat& m, const std::vector<Int>& rhs) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<int>> a(n, std::vector<int>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = static_cast<int>(mod_pos(m[i][j], 2).get_si());
        a[i][n] = static_cast<int>(mod_pos(rhs[i], 2).get_si());
    }
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (a[r][col]) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        for (int r = 0; r < n; ++r)
            if (r != row && a[r][col])
                for (int c = col; c <= n; ++c) a[r][c] ^= a[row][c];
        pivot_col[row] = col;
        ++row;
    }
    for (int r = row; r < n; ++r)
        if (a[r][n]) return std::nullopt;
    std::vector<int> x(n, 0);
    for (int r = 0; r < row; ++r) x[pivot_col[r]] = a[r][n];
    return x;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    const int k = n ? static_cast<int>(a[0].size()) : 0;
    const int m = k ? static_cast<int>(b[0].size()) : 0;
    IntMat r(n, std::vector<Int>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (int c = 0; c < m; ++c) r[i][c] += a[i][j] * b[j][c];
        }
    return r;
}

IntMat identity_mat(int n) {
    IntMat r(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

}  // namespace latkit
