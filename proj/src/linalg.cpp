#include "ncdp/linalg.hpp"

#include <stdexcept>

namespace ncdp::linalg {

Echelon rref(Matrix m, std::size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("rref: ragged matrix");
    Echelon e;
    std::size_t r = 0;
    Rational tmp;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                tmp = f * m[r][j];
                m[i][j] -= tmp;
            }
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols) {
    Echelon e = rref(m, cols);
    std::vector<char> is_pivot(cols, 0);
    for (auto p : e.pivots) is_pivot[p] = 1;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ncdp::linalg
