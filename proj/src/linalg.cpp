#include "lielimits/linalg.hpp"

#include "lielimits/error.hpp"

#include <algorithm>
#include <utility>

namespace lielimits::linalg {

void Matrix::add_row(std::vector<Rational> row) {
    if (row.size() > cols) cols = row.size();
    rows.push_back(std::move(row));
}

namespace {

void pad(Matrix& m) {
    for (auto& r : m.rows) r.resize(m.cols);
}

}  // namespace

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
    pad(m);
    std::vector<std::size_t> piv;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols && lead < m.rows.size(); ++c) {
        std::size_t p = lead;
        while (p < m.rows.size() && m.rows[p][c] == 0) ++p;
        if (p == m.rows.size()) continue;
        std::swap(m.rows[p], m.rows[lead]);
        auto& prow = m.rows[lead];
        Rational inv = 1 / prow[c];
        for (std::size_t k = c; k < m.cols; ++k) prow[k] *= inv;
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (r == lead || m.rows[r][c] == 0) continue;
            Rational f = m.rows[r][c];
            for (std::size_t k = c; k < m.cols; ++k) m.rows[r][k] -= f * prow[k];
        }
        piv.push_back(c);
        ++lead;
    }
    m.rows.resize(lead);
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t rank(const Matrix& m) { return rref(m).rows.size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols);
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows.size();
    Matrix aug(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(2 * n);
        for (std::size_t j = 0; j < n && j < m.rows[i].size(); ++j) row[j] = m.rows[i][j];
        row[n + i] = 1;
        aug.add_row(std::move(row));
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (r.rows.size() != n || (n > 0 && piv.back() >= n)) throw InternalError("matrix is singular");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.rows[i][j] = r.rows[i][n + j];
    return out;
}

bool in_row_space(const Matrix& m, const std::vector<Rational>& v) {
    Matrix a = m;
    a.cols = std::max(a.cols, v.size());
    std::size_t before = rank(a);
    a.add_row(v);
    return rank(a) == before;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace lielimits::linalg
