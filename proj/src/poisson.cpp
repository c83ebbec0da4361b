#include "ncdp/poisson.hpp"

#include "ncdp/linalg.hpp"
#include "ncdp/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncdp::poisson {

namespace {

using Exponent = CommPoly::Exponent;

// Monomials of weighted degree exactly m, in a fixed order.
std::vector<Exponent> monomials(std::span<const int> w, int m) {
    std::vector<Exponent> out;
    for (int i = 0; i * w[0] <= m; ++i)
        for (int j = 0; i * w[0] + j * w[1] <= m; ++j) {
            int rest = m - i * w[0] - j * w[1];
            if (rest % w[2] == 0) out.push_back({i, j, rest / w[2]});
        }
    return out;
}

CommPoly det3(const std::array<std::array<CommPoly, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Rank of span { g * mono : g in gens, mono of degree m - deg g } inside the
// monomials of the given list of degrees.
std::size_t span_rank(const std::vector<CommPoly>& gens, std::span<const int> w, const std::vector<int>& degrees,
                      bool cumulative) {
    std::map<Exponent, std::size_t> index;
    for (int k : degrees)
        for (const auto& e : monomials(w, k)) index.emplace(e, index.size());
    linalg::Matrix rows;
    int top = degrees.empty() ? -1 : *std::max_element(degrees.begin(), degrees.end());
    for (const auto& g : gens) {
        int dg = g.degree(w);
        for (int k : degrees) {
            if (cumulative && k != top) continue;
            for (int s = (cumulative ? 0 : k - dg); s <= k - dg; ++s) {
                if (s < 0) continue;
                for (const auto& e : monomials(w, s)) {
                    std::vector<Rational> row(index.size(), Rational(0));
                    for (const auto& [ge, c] : g.terms()) {
                        Exponent p{ge[0] + e[0], ge[1] + e[1], ge[2] + e[2]};
                        row[index.at(p)] += c;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return linalg::rank(rows, index.size());
}

}  // namespace

CommPoly bracket(const PoissonStructure& ps, const CommPoly& f, const CommPoly& g) {
    std::array<std::array<CommPoly, 3>, 3> m;
    for (std::size_t i = 0; i < 3; ++i) {
        m[0][i] = ps.phi.derivative(i);
        m[1][i] = f.derivative(i);
        m[2][i] = g.derivative(i);
    }
    return det3(m);
}

bool jacobi_identity_check(const PoissonStructure& ps) {
    CommPoly x = var_x(), y = var_y(), z = var_z();
    CommPoly s = bracket(ps, x, bracket(ps, y, z)) + bracket(ps, y, bracket(ps, z, x)) +
                 bracket(ps, z, bracket(ps, x, y));
    return s.is_zero();
}

bool casimir_check(const PoissonStructure& ps) {
    for (std::size_t i = 0; i < 3; ++i)
        if (!bracket(ps, ps.phi, CommPoly::variable(i)).is_zero()) return false;
    return true;
}

OneForm exterior_derivative(const CommPoly& f) { return {{f.derivative(0), f.derivative(1), f.derivative(2)}}; }

TwoForm exterior_derivative(const OneForm& a) {
    return {{a.c[2].derivative(1) - a.c[1].derivative(2), a.c[0].derivative(2) - a.c[2].derivative(0),
             a.c[1].derivative(0) - a.c[0].derivative(1)}};
}

CommPoly wedge(const OneForm& a, const TwoForm& b) { return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2]; }

OneForm contract_volume(const Bivector& pi) { return {pi.c}; }

Bivector bivector_from_form(const OneForm& a) { return {a.c}; }

Bivector poisson_bivector(const PoissonStructure& ps) {
    return {{ps.phi.derivative(0), ps.phi.derivative(1), ps.phi.derivative(2)}};
}

FrobeniusReport frobenius_and_unimodularity(const OneForm& alpha) {
    FrobeniusReport r;
    r.dalpha = exterior_derivative(alpha);
    r.alpha_dalpha = wedge(alpha, r.dalpha);
    r.unimodular = r.dalpha.is_zero();
    r.poisson = r.alpha_dalpha.is_zero();
    if (r.unimodular && !r.poisson) throw std::logic_error("frobenius_and_unimodularity: closed form with alpha^dalpha != 0");
    return r;
}

JacobiReport jacobi_ring(const CommPoly& phi, const WeightSystem& ws, std::optional<int> degree_cap) {
    auto w = ws.weights();
    JacobiReport rep;
    rep.phi = phi;
    int dphi = phi.degree(w);
    rep.degree_cap = degree_cap.value_or(3 * std::max(dphi, 1));
    std::vector<CommPoly> gens;
    for (std::size_t i = 0; i < 3; ++i) {
        CommPoly g = phi.derivative(i);
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    rep.graded = phi.is_homogeneous(w);
    int run = 0;
    if (rep.graded) {
        std::vector<int> dims;
        for (int m = 0; m <= rep.degree_cap; ++m) {
            std::size_t n = monomials(w, m).size();
            int dim = static_cast<int>(n - span_rank(gens, w, {m}, false));
            dims.push_back(dim);
            run = dim == 0 ? run + 1 : 0;
            if (run >= ws.max_weight()) {
                rep.finite = true;
                break;
            }
        }
        while (!dims.empty() && dims.back() == 0) dims.pop_back();
        rep.graded_dims = dims;
        if (rep.finite) {
            int total = 0;
            for (int v : dims) total += v;
            rep.mu = total;
        }
        return rep;
    }
    std::vector<int> degrees;
    std::size_t n = 0;
    for (int m = 0; m <= rep.degree_cap; ++m) {
        degrees.push_back(m);
        n += monomials(w, m).size();
        int dim = static_cast<int>(n - span_rank(gens, w, degrees, true));
        run = !rep.filtered_dims.empty() && rep.filtered_dims.back() == dim ? run + 1 : 0;
        rep.filtered_dims.push_back(dim);
        if (run >= ws.max_weight() && m >= dphi) {
            rep.finite = true;
            rep.mu = dim;
            break;
        }
    }
    return rep;
}

MilnorReport milnor_number(const WeightSystem& ws, int d) {
    MilnorReport r;
    r.mu = series::milnor_formula(ws.a(), ws.b(), ws.c(), d);
    r.integral = r.mu.get_den() == 1;
    int a = ws.a(), b = ws.b(), c = ws.c();
    if (d == a + b + c && d % a == 0 && d % b == 0 && d % c == 0) {
        Rational alt = Rational((a + b) * (a + c) * (b + c), a * b * c);
        alt.canonicalize();
        int legs = d / a + d / b + d / c - 1;
        r.legs_agree = alt == r.mu && r.mu == legs;
    }
    return r;
}

CommPoly build_delpezzo_phi(const ParameterSet& params, const WeightSystem& ws) {
    auto legs = ncalg::leg_exponents(ws);
    const std::array<const std::vector<Rational>*, 3> polys{&params.P, &params.Q, &params.R};
    const std::array<int, 3> exps{legs.p, legs.q, legs.r};
    CommPoly phi = params.tau.value_or(1) * var_x() * var_y() * var_z();
    phi += CommPoly(params.nu.value_or(0));
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& coeffs = *polys[i];
        if (static_cast<int>(coeffs.size()) > exps[i] + 1)
            throw std::invalid_argument("build_delpezzo_phi: polynomial degree exceeds the leg exponent");
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            CommPoly::Exponent e{};
            e[i] = static_cast<int>(k);
            phi += CommPoly::monomial(e, coeffs[k]);
        }
    }
    return phi;
}

int delpezzo_parameter_count(const WeightSystem& ws) {
    auto legs = ncalg::leg_exponents(ws);
    return (legs.p - 1) + (legs.q - 1) + (legs.r - 1) + 2;
}

}  // namespace ncdp::poisson
