#ifndef NCDP_CENTER_HPP
#define NCDP_CENTER_HPP

// Central elements of A(Phi): the linear system [v, Psi] = 0 solved in
// quotient coordinates, plus the closed-form elements for the E6/E7 leading
// potentials and the E6 appendix relation family.

#include "ncdp/gridal.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncdp::center {

using gridal::IdealCalculus;
using gridal::Mode;
using gridal::RelationSet;
using ncalg::NCPoly;
using ncalg::WeightSystem;

// Parameter values at which a closed formula has a vanishing denominator.
class NonGenericParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CentralizerSolution {
    int degree_bound = 0;
    Mode mode = Mode::Filtered;
    std::size_t solution_dim = 0;
    std::vector<NCPoly> basis;  // normal forms
    // Unique solution with zero constant term whose first nonzero coordinate
    // (ascending deglex) is 1; empty unless the non-constant part of the
    // solution space is one-dimensional.
    std::optional<NCPoly> normalized_psi;
    std::vector<std::string> diagnostics;
};

// Graded mode: unknowns are the degree-bound coordinates; filtered mode: all
// coordinates up to the bound. Conditions are NF([v, Psi]) = 0 at degree
// bound + weight(v) for v in {x, y, z}.
CentralizerSolution centralizer(const RelationSet& rs, int bound, Mode mode);
CentralizerSolution centralizer(IdealCalculus& ic, int bound);

// Filtered mode unless both the relations and psi are homogeneous.
bool verify_central(const RelationSet& rs, const NCPoly& psi);
bool verify_central(IdealCalculus& ic, const NCPoly& psi);

enum class Match { Equal, Proportional, Distinct };
const char* match_name(Match m);

struct Comparison {
    Match verdict = Match::Distinct;
    std::optional<Rational> scalar;  // a = scalar * b modulo the ideal and constants
};

// Equal: identical normal forms. Proportional: the normal forms with the
// constant coefficient removed differ by a nonzero scalar.
Comparison compare_mod_ideal(const RelationSet& rs, const NCPoly& a, const NCPoly& b);

struct AppendixParams {
    Rational q, t, a1, a2, b1, b2, c1, c2;
    static AppendixParams random(RationalSampler& rng);
};

// xy - q yx - t z^2 + c1 z + c2, yz - q zy - t x^2 + a1 x + a2,
// zx - q xz - t y^2 + b1 y + b2 (weights 1,1,1).
RelationSet appendix_relations(const AppendixParams& p);

// Degree-3 central element of the appendix family.
NCPoly appendix_psi(const AppendixParams& p);

// Closed-form central elements for xyz - t yxz + c(...) with leading-term
// P, Q, R. E6: c y^3 + (t^3-c^3)/(c^3+1) (yzx + c z^3) - t zyx, needs
// c^3 != -1. E7: (t^2+1) xyxy - k (t xy^2x + c^2 y^4) + t y^2x^2 with
// k = (t^4+t^2+1)/(t^2-c^4), needs t^2 != c^4. Throws NonGenericParameters
// on a vanishing denominator and std::invalid_argument for other weights.
NCPoly table_psi(const WeightSystem& ws, const Rational& t, const Rational& c);

// The E7 element with the sign of the c^2 y^4 term reversed, which is the
// form that commutes with x, y, z in the E7 algebra.
NCPoly table_psi_e7_sign_corrected(const Rational& t, const Rational& c);

}  // namespace ncdp::center

#endif  // NCDP_CENTER_HPP
