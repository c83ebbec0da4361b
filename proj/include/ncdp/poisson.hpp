#ifndef NCDP_POISSON_HPP
#define NCDP_POISSON_HPP

// Unimodular Poisson brackets {f, g} vol = dphi ^ df ^ dg on C[x,y,z], the
// exterior calculus of one-forms needed to test them, and Jacobi rings.

#include "ncdp/commpoly.hpp"
#include "ncdp/ncalg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ncdp::poisson {

using ncalg::ParameterSet;
using ncalg::WeightSystem;

struct PoissonStructure {
    CommPoly phi;
    WeightSystem ws = WeightSystem::E6();
};

// det of the Jacobian of (phi, f, g); {x,y} = phi_z, {y,z} = phi_x, {z,x} = phi_y.
CommPoly bracket(const PoissonStructure& ps, const CommPoly& f, const CommPoly& g);

// {x,{y,z}} + {y,{z,x}} + {z,{x,y}} = 0 exactly.
bool jacobi_identity_check(const PoissonStructure& ps);

// {phi, x} = {phi, y} = {phi, z} = 0.
bool casimir_check(const PoissonStructure& ps);

// f dx + g dy + h dz.
struct OneForm {
    std::array<CommPoly, 3> c;
    friend bool operator==(const OneForm&, const OneForm&) = default;
};

// Coefficients of dy^dz, dz^dx, dx^dy.
struct TwoForm {
    std::array<CommPoly, 3> c;
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
};

// Coefficients of d_y^d_z, d_z^d_x, d_x^d_y.
struct Bivector {
    std::array<CommPoly, 3> c;
    friend bool operator==(const Bivector&, const Bivector&) = default;
};

OneForm exterior_derivative(const CommPoly& f);
TwoForm exterior_derivative(const OneForm& a);
// alpha ^ beta as a multiple of vol.
CommPoly wedge(const OneForm& a, const TwoForm& b);

// i_pi vol, and its inverse.
OneForm contract_volume(const Bivector& pi);
Bivector bivector_from_form(const OneForm& a);

// The bivector i_{dphi} of the standard 3-vector.
Bivector poisson_bivector(const PoissonStructure& ps);

struct FrobeniusReport {
    bool poisson = false;     // alpha ^ d alpha = 0
    bool unimodular = false;  // d alpha = 0
    CommPoly alpha_dalpha;
    TwoForm dalpha;
};

FrobeniusReport frobenius_and_unimodularity(const OneForm& alpha);

struct JacobiReport {
    CommPoly phi;
    bool graded = false;
    std::vector<int> graded_dims;      // dim J^(m), m = 0.. (trailing zeros removed), graded only
    std::vector<int> filtered_dims;    // dim of the degree <= m truncation, nonhomogeneous phi only
    std::optional<int> mu;             // total dimension when finite
    bool finite = false;
    int degree_cap = 0;
};

// Graded components of C[x,y,z]/(phi_x, phi_y, phi_z) by row reduction up to
// degree_cap (default 3 * weighted degree of phi). finite when the dims vanish
// for max-weight consecutive degrees within the cap. A nonhomogeneous phi gets
// the truncated spans sum phi_i * C[x,y,z]_{<= m - deg phi_i} instead, and the
// total dimension once those stabilise.
JacobiReport jacobi_ring(const CommPoly& phi, const WeightSystem& ws, std::optional<int> degree_cap = std::nullopt);

struct MilnorReport {
    Rational mu;        // (d-a)(d-b)(d-c)/(abc)
    bool integral = false;
    // For d = a+b+c with integral legs: (a+b)(a+c)(b+c)/(abc) = mu = p+q+r-1.
    std::optional<bool> legs_agree;
};

MilnorReport milnor_number(const WeightSystem& ws, int d);

// tau*xyz + P(x) + Q(y) + R(z) + nu, with tau and nu defaulting to 1 and 0.
// Throws std::invalid_argument unless d/a, d/b, d/c are integers and each of
// P, Q, R has degree at most its leg exponent.
CommPoly build_delpezzo_phi(const ParameterSet& params, const WeightSystem& ws);

// (p-1) + (q-1) + (r-1) + 2 coefficients: the lower terms of P, Q, R plus tau and nu.
int delpezzo_parameter_count(const WeightSystem& ws);

}  // namespace ncdp::poisson

#endif  // NCDP_POISSON_HPP
