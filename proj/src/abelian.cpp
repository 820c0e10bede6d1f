#include "qfwitt/abelian.hpp"

#include <algorithm>

namespace qf {

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.empty())
        return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, std::vector<Int>(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j)
                    c[i][j] += a[i][l] * b[l][j];
    return c;
}

std::vector<Int> row_times(const std::vector<Int>& x, const IntMatrix& m)
{
    std::vector<Int> out(m.empty() ? 0 : m[0].size(), Int(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            for (std::size_t j = 0; j < out.size(); ++j)
                out[j] += x[i] * m[i][j];
    return out;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j)
{
    for (auto& row : a)
        std::swap(row[i], row[j]);
}

// row_i -= q * row_j
void row_axpy(IntMatrix& a, std::size_t i, std::size_t j, const Int& q)
{
    for (std::size_t c = 0; c < a[i].size(); ++c)
        a[i][c] -= q * a[j][c];
}

// col_i -= q * col_j
void col_axpy(IntMatrix& a, std::size_t i, std::size_t j, const Int& q)
{
    for (auto& row : a)
        row[i] -= q * row[j];
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& A0, std::size_t cols)
{
    IntMatrix A = A0;
    const std::size_t rows = A.size();
    SmithForm out;
    out.U = identity_matrix(rows);
    out.V = identity_matrix(cols);
    out.Vinv = identity_matrix(cols);
    // Column operations: V <- V E, Vinv <- E^-1 Vinv.
    auto col_swap = [&](std::size_t i, std::size_t j) {
        swap_cols(A, i, j);
        swap_cols(out.V, i, j);
        swap_rows(out.Vinv, i, j);
    };
    auto col_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        col_axpy(A, i, j, q);
        col_axpy(out.V, i, j, q);
        row_axpy(out.Vinv, j, i, -q);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        swap_rows(A, i, j);
        swap_rows(out.U, i, j);
    };
    auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        row_axpy(A, i, j, q);
        row_axpy(out.U, i, j, q);
    };

    const std::size_t lim = std::min(rows, cols);
    for (std::size_t t = 0; t < lim; ++t) {
        for (;;) {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (A[i][j] != 0 && (pi == rows || abs(A[i][j]) < abs(A[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                break;
            if (pi != t)
                row_swap(pi, t);
            if (pj != t)
                col_swap(pj, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (A[i][t] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
                    row_sub(i, t, q);
                    if (A[i][t] != 0)
                        clean = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (A[t][j] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
                    col_sub(j, t, q);
                    if (A[t][j] != 0)
                        clean = false;
                }
            if (!clean)
                continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(A[i][j].get_mpz_t(), A[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            row_sub(t, bad, Int(-1));
        }
        if (A[t][t] < 0) {
            for (auto& c : A[t])
                c = -c;
            for (auto& c : out.U[t])
                c = -c;
        }
    }
    out.diagonal.assign(cols, Int(0));
    for (std::size_t t = 0; t < lim; ++t)
        out.diagonal[t] = A[t][t];
    return out;
}

IntMatrix kernel_lattice(const IntMatrix& images, const std::vector<Int>& moduli)
{
    const std::size_t k = images.size(), r = moduli.size();
    IntMatrix B;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> row(r + k, Int(0));
        for (std::size_t j = 0; j < r; ++j)
            row[j] = images[i][j];
        row[r + i] = 1;
        B.push_back(row);
    }
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Int> row(r + k, Int(0));
        row[j] = moduli[j];
        B.push_back(row);
    }
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < r && pivot < B.size(); ++c) {
        for (;;) {
            std::size_t best = B.size();
            for (std::size_t i = pivot; i < B.size(); ++i)
                if (B[i][c] != 0 && (best == B.size() || abs(B[i][c]) < abs(B[best][c])))
                    best = i;
            if (best == B.size())
                break;
            std::swap(B[pivot], B[best]);
            bool done = true;
            for (std::size_t i = pivot + 1; i < B.size(); ++i)
                if (B[i][c] != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), B[i][c].get_mpz_t(), B[pivot][c].get_mpz_t());
                    row_axpy(B, i, pivot, q);
                    if (B[i][c] != 0)
                        done = false;
                }
            if (done) {
                ++pivot;
                break;
            }
        }
    }
    IntMatrix out;
    for (std::size_t i = pivot; i < B.size(); ++i)
        out.emplace_back(B[i].begin() + static_cast<long>(r), B[i].end());
    return out;
}

} // namespace qf
