/**
 * @file linalg.hh
 * @brief Dense exact linear algebra over a field (row reduction, rank, nullspaces).
 */
#ifndef LOCALCHI_LINALG_HH
#define LOCALCHI_LINALG_HH

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace localchi {

template <class F>
using dense_matrix = std::vector<std::vector<F>>;

// Row-reduce `m` in place, visiting columns in the given order.
// Returns the pivot positions as (row, column) pairs, one per pivot, in the
// order they were placed.  Pivot choice is the first row with a nonzero
// entry, so the result is deterministic.
template <class F>
std::vector<std::pair<int, int>> rref(dense_matrix<F>& m, const std::vector<int>& col_order)
{
    std::vector<std::pair<int, int>> pivots;
    if (m.empty())
        return pivots;
    int nrows = (int)m.size();
    int prow = 0;
    for (int col : col_order) {
        if (prow >= nrows)
            break;
        int hit = -1;
        for (int r = prow; r < nrows; ++r) {
            if (!m[r][col].is_zero()) {
                hit = r;
                break;
            }
        }
        if (hit < 0)
            continue;
        std::swap(m[prow], m[hit]);
        F inv = m[prow][col].inv();
        for (auto& e : m[prow])
            e = e * inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == prow || m[r][col].is_zero())
                continue;
            F c = m[r][col];
            for (std::size_t j = 0; j < m[r].size(); ++j)
                m[r][j] = m[r][j] - c * m[prow][j];
        }
        pivots.emplace_back(prow, col);
        ++prow;
    }
    return pivots;
}

template <class F>
std::vector<std::pair<int, int>> rref(dense_matrix<F>& m)
{
    std::vector<int> order;
    if (!m.empty())
        for (std::size_t j = 0; j < m[0].size(); ++j)
            order.push_back((int)j);
    return rref(m, order);
}

template <class F>
int rank(dense_matrix<F> m)
{
    return (int)rref(m).size();
}

// Nullspace basis of the linear system m * x = 0, with pivots preferred on
// columns earlier in `col_order`.  One basis vector per free column, unit in
// that column, listed in `col_order` order of the free columns.
template <class F>
std::vector<std::vector<F>> nullspace(dense_matrix<F> m, const std::vector<int>& col_order)
{
    int ncols = (int)col_order.size();
    auto pivots = rref(m, col_order);
    std::vector<int> pivot_of_col(ncols, -1);
    for (auto& [r, c] : pivots)
        pivot_of_col[c] = r;
    std::vector<std::vector<F>> basis;
    for (int col : col_order) {
        if (pivot_of_col[col] >= 0)
            continue;
        std::vector<F> v(ncols, F::zero());
        v[col] = F::one();
        for (auto& [r, c] : pivots)
            v[c] = F::zero() - m[r][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Is `target` in the column span of `cols`?  (`cols` given column-wise.)
template <class F>
bool in_column_span(const std::vector<std::vector<F>>& cols, const std::vector<F>& target)
{
    if (cols.empty()) {
        for (auto& e : target)
            if (!e.is_zero())
                return false;
        return true;
    }
    std::size_t dim = target.size();
    dense_matrix<F> m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m[r].reserve(cols.size() + 1);
        for (auto& c : cols) {
            assert(c.size() == dim);
            m[r].push_back(c[r]);
        }
        m[r].push_back(target[r]);
    }
    std::vector<int> order;
    for (std::size_t j = 0; j < cols.size(); ++j)
        order.push_back((int)j);
    auto piv = rref(m, order);
    for (std::size_t r = piv.size(); r < dim; ++r)
        if (!m[r][cols.size()].is_zero())
            return false;
    return true;
}

} // namespace localchi

#endif
