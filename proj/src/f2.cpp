#include "qfwitt/f2.hpp"

#include <utility>

namespace qf {

int f2_rank(F2Matrix m)
{
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !m[p][c])
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] ^= m[r][j];
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<F2Row> f2_solve(const F2Matrix& m0, const F2Row& rhs)
{
    const std::size_t rows = m0.size();
    const std::size_t cols = rows ? m0[0].size() : 0;
    F2Matrix m = m0;
    for (std::size_t i = 0; i < rows; ++i)
        m[i].push_back(rhs[i]);
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !m[p][c])
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j <= cols; ++j)
                    m[i][j] ^= m[r][j];
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols])
            return std::nullopt;
    F2Row x(cols, 0);
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = m[i][cols];
    return x;
}

F2Row f2_multiply(const F2Matrix& m, const F2Row& x)
{
    F2Row out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            out[i] ^= m[i][j] & x[j];
    return out;
}

} // namespace qf
