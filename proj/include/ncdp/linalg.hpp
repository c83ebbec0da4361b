#ifndef NCDP_LINALG_HPP
#define NCDP_LINALG_HPP

// Dense exact linear algebra over the rationals.

#include "ncdp/rational.hpp"

#include <cstddef>
#include <vector>

namespace ncdp::linalg {

using Matrix = std::vector<std::vector<Rational>>;  // row-major, rows of equal length

struct Echelon {
    Matrix rows;                     // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// First-nonzero pivoting, left to right.
Echelon rref(Matrix m, std::size_t cols);

std::size_t rank(const Matrix& m, std::size_t cols);

// One basis vector per free column, ascending free column; the free
// coordinate is 1 and the other free coordinates are 0.
std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols);

}  // namespace ncdp::linalg

#endif  // NCDP_LINALG_HPP
