#include "ncdp/matfact.hpp"

#include <stdexcept>

namespace ncdp::matfact {

CurvePoint CurvePoint::from_coordinates(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    if (alpha == 0 || beta == 0 || gamma == 0)
        throw std::invalid_argument("CurvePoint: alpha, beta, gamma must all be nonzero");
    CurvePoint p{alpha, beta, gamma, 0};
    p.tau = -(alpha * alpha * alpha + beta * beta * beta + gamma * gamma * gamma) / (alpha * beta * gamma);
    return p;
}

bool CurvePoint::on_curve() const {
    return alpha * alpha * alpha + beta * beta * beta + gamma * gamma * gamma + tau * alpha * beta * gamma == 0;
}

bool CurvePoint::singular_curve() const { return tau * tau * tau == -27; }

CommPoly psi_tau(const Rational& tau) {
    CommPoly x = var_x(), y = var_y(), z = var_z();
    return x.pow(3) + y.pow(3) + z.pow(3) + tau * (x * y * z);
}

Matrix3<CommPoly> build_D_matrix(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    return d_matrix(CommPoly(alpha), CommPoly(beta), CommPoly(gamma), var_x(), var_y(), var_z());
}

MatrixFactorization factorization_candidate(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                            const Rational& tau) {
    if (alpha == 0 || beta == 0 || gamma == 0)
        throw std::invalid_argument("factorization_candidate: alpha, beta, gamma must all be nonzero");
    MatrixFactorization mf;
    mf.g = build_D_matrix(alpha, beta, gamma);
    mf.g_prime = adjugate(mf.g);
    Rational s = -1 / (alpha * beta * gamma);
    for (auto& row : mf.g_prime)
        for (auto& e : row) e *= s;
    mf.psi = psi_tau(tau);
    return mf;
}

MatrixFactorization build_D(const CurvePoint& pt) {
    if (!pt.on_curve()) throw std::invalid_argument("build_D: point is not on the curve");
    return factorization_candidate(pt.alpha, pt.beta, pt.gamma, pt.tau);
}

bool verify_factorization(const MatrixFactorization& mf) {
    return is_scalar_identity(multiply(mf.g, mf.g_prime), mf.psi) &&
           is_scalar_identity(multiply(mf.g_prime, mf.g), mf.psi);
}

bool degrees_ok(const MatrixFactorization& mf) {
    const std::array<int, 3> ones{1, 1, 1};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const auto &e = mf.g[i][j], &f = mf.g_prime[i][j];
            if (!e.is_zero() && (!e.is_homogeneous(ones) || e.total_degree() != 1)) return false;
            if (!f.is_zero() && (!f.is_homogeneous(ones) || f.total_degree() != 2)) return false;
        }
    return true;
}

bool adjugate_identity_check(const Rational& alpha, const Rational& beta, const Rational& gamma) {
    auto D = build_D_matrix(alpha, beta, gamma);
    auto adj = adjugate(D);
    CommPoly det = determinant(D);
    return is_scalar_identity(multiply(D, adj), det) && is_scalar_identity(multiply(adj, D), det);
}

namespace {

using P6 = MPoly<6>;

Matrix3<P6> symbolic_D() {
    return d_matrix(P6::variable(0), P6::variable(1), P6::variable(2), P6::variable(3), P6::variable(4),
                    P6::variable(5));
}

}  // namespace

bool adjugate_identity_symbolic() {
    auto D = symbolic_D();
    auto adj = adjugate(D);
    P6 det = determinant(D);
    return is_scalar_identity(multiply(D, adj), det) && is_scalar_identity(multiply(adj, D), det);
}

bool determinant_identity_symbolic() {
    P6 a = P6::variable(0), b = P6::variable(1), g = P6::variable(2);
    P6 x = P6::variable(3), y = P6::variable(4), z = P6::variable(5);
    P6 expected = (a.pow(3) + b.pow(3) + g.pow(3)) * x * y * z - a * b * g * (x.pow(3) + y.pow(3) + z.pow(3));
    return determinant(symbolic_D()) == expected;
}

bool determinant_proportional(const Rational& alpha, const Rational& beta, const Rational& gamma,
                              const Rational& tau) {
    CommPoly det = determinant(build_D_matrix(alpha, beta, gamma));
    CommPoly psi = psi_tau(tau);
    if (det.is_zero()) return true;
    Rational s = det.coefficient({3, 0, 0});
    return det == s * psi;
}

}  // namespace ncdp::matfact
