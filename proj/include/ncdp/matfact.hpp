#ifndef NCDP_MATFACT_HPP
#define NCDP_MATFACT_HPP

// The 3x3 linear matrix factorizations D * D' = psi_tau * Id of the plane
// cubic psi_tau = x^3 + y^3 + z^3 + tau*xyz, one for each point
// (alpha : beta : gamma) of the curve psi_tau = 0 with alpha*beta*gamma != 0.

#include "ncdp/commpoly.hpp"

#include <array>
#include <cstddef>

namespace ncdp::matfact {

template <class P>
using Matrix3 = std::array<std::array<P, 3>, 3>;

template <class P>
Matrix3<P> multiply(const Matrix3<P>& a, const Matrix3<P>& b) {
    Matrix3<P> out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

template <class P>
P determinant(const Matrix3<P>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Transposed cofactor matrix.
template <class P>
Matrix3<P> adjugate(const Matrix3<P>& m) {
    Matrix3<P> out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            out[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    return out;
}

template <class P>
bool is_scalar_identity(const Matrix3<P>& m, const P& s) {
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (!(m[i][j] == (i == j ? s : P()))) return false;
    return true;
}

// D = [[a x, b z, g y], [g z, a y, b x], [b y, g x, a z]] with entries in the
// polynomial ring P, given the coefficient and coordinate elements.
template <class P>
Matrix3<P> d_matrix(const P& a, const P& b, const P& g, const P& x, const P& y, const P& z) {
    return {{{a * x, b * z, g * y}, {g * z, a * y, b * x}, {b * y, g * x, a * z}}};
}

struct CurvePoint {
    Rational alpha, beta, gamma;
    Rational tau;  // -(alpha^3 + beta^3 + gamma^3) / (alpha beta gamma)

    // Throws std::invalid_argument if any coordinate is zero.
    static CurvePoint from_coordinates(const Rational& alpha, const Rational& beta, const Rational& gamma);
    // psi_tau(alpha, beta, gamma) == 0.
    bool on_curve() const;
    // tau^3 = -27: the cubic is a union of three lines.
    bool singular_curve() const;
};

struct MatrixFactorization {
    Matrix3<CommPoly> g;
    Matrix3<CommPoly> g_prime;
    CommPoly psi;
};

CommPoly psi_tau(const Rational& tau);

Matrix3<CommPoly> build_D_matrix(const Rational& alpha, const Rational& beta, const Rational& gamma);

// (D, -adj(D)/(alpha beta gamma), psi_tau).
MatrixFactorization build_D(const CurvePoint& pt);

// The same construction for arbitrary nonzero coordinates and a chosen tau;
// a genuine factorization only when the point lies on psi_tau = 0.
MatrixFactorization factorization_candidate(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                            const Rational& tau);

// g g' = psi Id and g' g = psi Id.
bool verify_factorization(const MatrixFactorization& mf);

// Entries of g homogeneous linear, entries of g' homogeneous quadratic.
bool degrees_ok(const MatrixFactorization& mf);

// D adj(D) = adj(D) D = det(D) Id for the given coefficients.
bool adjugate_identity_check(const Rational& alpha, const Rational& beta, const Rational& gamma);

// The adjugate identity and det D = (a^3+b^3+g^3) xyz - a b g (x^3+y^3+z^3)
// in the polynomial ring on alpha, beta, gamma, x, y, z.
bool adjugate_identity_symbolic();
bool determinant_identity_symbolic();

// det D is a rational multiple of psi_tau.
bool determinant_proportional(const Rational& alpha, const Rational& beta, const Rational& gamma,
                              const Rational& tau);

}  // namespace ncdp::matfact

#endif  // NCDP_MATFACT_HPP
