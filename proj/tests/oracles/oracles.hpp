#ifndef NCDP_TEST_ORACLES_HPP
#define NCDP_TEST_ORACLES_HPP

// Independent reference computations used by the tests.

#include "ncdp/gridal.hpp"

#include <array>
#include <memory>
#include <vector>

namespace ncdp::oracle {

using gridal::Mode;
using gridal::RelationSet;
using ncalg::NCPoly;

// Incremental echelon form over every word of the free algebra up to the
// bound. Exact but memory and time grow with the full word count.
class FullEchelon {
public:
    FullEchelon(RelationSet rs, Mode mode);
    ~FullEchelon();
    std::size_t quotient_dim(int m);
    std::vector<std::size_t> quotient_dims(int n);
    NCPoly normal_form(const NCPoly& f, int m);

private:
    class Impl;
    std::unique_ptr<Impl> impl_;
};

// All products u*r*w spanned directly.
std::size_t brute_force_rank(const RelationSet& rs, int m, Mode mode);

// Number of monomials x^i y^j z^k of weighted degree m, m = 0..n, by direct
// enumeration.
std::vector<long long> monomial_counts(std::array<int, 3> w, int n);

// Words of weighted degree m by depth-first enumeration.
long long enumerate_words(std::array<int, 3> w, int m);

// Power series num/den to order n; den[0] must be 1.
std::vector<long long> series_divide(std::vector<long long> num, std::vector<long long> den, int n);

// Product of two ascending coefficient lists.
std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b);

}  // namespace ncdp::oracle

#endif
