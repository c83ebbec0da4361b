// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// (rational arithmetic, zero tolerance); only the time budgets below are
// numeric limits.
//
// Exit status is 0 when every criterion passes or fails only for a pinned
// known reason (the printed E7 central element and the E7/E8 Jacobi rings at
// tau = 1). Any other failure returns 1.

#include "ncdp/center.hpp"
#include "ncdp/classify.hpp"
#include "ncdp/gridal.hpp"
#include "ncdp/matfact.hpp"
#include "ncdp/poisson.hpp"
#include "ncdp/series.hpp"
#include "oracles/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ncdp;
using center::Match;
using gridal::Mode;
using gridal::standard_relations;
using ncalg::WeightSystem;

namespace {

constexpr double kFlatnessBudget = 300.0;      // seconds, criterion 1 in total
constexpr double kAppendixBudget = 60.0;       // seconds per specialization
constexpr double kJacobiBudget = 30.0;         // seconds, criterion 6
constexpr double kFactorizationBudget = 60.0;  // seconds, criterion 9

struct Verdict {
    bool pass = true;
    bool known = false;  // the only failures are pinned conflicts
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

const std::vector<WeightSystem> kTypes{WeightSystem::E6(), WeightSystem::E7(), WeightSystem::E8()};

const char* type_name(const WeightSystem& ws) {
    return ws.c() == 1 ? "E6" : ws.c() == 2 && ws.b() == 1 ? "E7" : "E8";
}

std::array<int, 3> weights(const WeightSystem& ws) { return {ws.a(), ws.b(), ws.c()}; }

template <class T>
std::string list(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<long long> as_ll(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::vector<long long> as_ll(const std::vector<Integer>& v) {
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

std::vector<long long> as_ll(const std::vector<Rational>& v) {
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(x.get_den() == 1 ? x.get_num().get_si() : -999999);
    return out;
}

// Coefficients of (1 - u^d) / prod (1 - u^w) up to degree n.
std::vector<long long> central_quotient_series(const WeightSystem& ws, int n) {
    std::vector<long long> den{1};
    for (int w : weights(ws)) {
        std::vector<long long> f(w + 1, 0);
        f[0] = 1;
        f[w] = -1;
        den = oracle::poly_mul(den, f);
    }
    std::vector<long long> num(ws.d() + 1, 0);
    num[0] = 1;
    num[ws.d()] = -1;
    return oracle::series_divide(num, den, n);
}

// Generic leading parameters that satisfy the closed-form guards.
std::pair<Rational, Rational> generic_tc(const WeightSystem& ws, RationalSampler& rng) {
    for (;;) {
        Rational t = rng.nonzero(), c = rng.nonzero();
        try {
            center::table_psi(ws, t, c);
            if (ws.c() == 2) center::table_psi_e7_sign_corrected(t, c);
            return {t, c};
        } catch (const center::NonGenericParameters&) {
        }
    }
}

CommPoly canonical_phi(const WeightSystem& ws, const Rational& tau) {
    auto p = ncalg::leading_params(ws, 1, 1);
    p.tau = tau;
    return poisson::build_delpezzo_phi(p, ws);
}

void flatness(Verdict& v) {
    const std::vector<std::vector<long long>> printed{
        {1, 3, 6, 10, 15, 21, 28, 36, 45}, {1, 2, 4, 6, 9, 12, 16, 20, 25}, {1, 1, 2, 3, 4, 5, 7, 8, 10}};
    Clock clock;
    int runs = 0;
    for (std::size_t k = 0; k < kTypes.size(); ++k) {
        const auto& ws = kTypes[k];
        int n = 2 * ws.d() + 2;
        auto expect = oracle::monomial_counts(weights(ws), n);
        v.require(std::equal(printed[k].begin(), printed[k].end(), expect.begin()),
                  std::string(type_name(ws)) + " printed list is not a prefix of the product series");
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            RationalSampler rng(seed);
            auto rs = standard_relations(ws, ncalg::random_params(ws, rng));
            auto rep = gridal::hilbert_certificate(rs, n);
            v.require(rep.mode == Mode::Filtered, "certificate not run in filtered mode");
            v.require(as_ll(rep.actual) == expect,
                      std::string(type_name(ws)) + " seed " + std::to_string(seed) + " dims " + list(rep.actual));
            ++runs;
        }
        v.detail << " " << type_name(ws) << " to degree " << n << ";";
    }
    v.require(clock.seconds() < kFlatnessBudget, "time budget");
    v.detail << " " << runs << " filtered certificates equal 1/prod(1-u^w), " << clock.seconds() << " s";
}

void appendix(Verdict& v) {
    for (std::uint64_t seed : {101, 202, 303}) {
        Clock clock;
        RationalSampler rng(seed);
        auto p = center::AppendixParams::random(rng);
        auto rs = center::appendix_relations(p);
        auto sol = center::centralizer(rs, 3, Mode::Filtered);
        v.require(sol.solution_dim == 2, "solution_dim " + std::to_string(sol.solution_dim));
        bool prop = sol.normalized_psi &&
                    center::compare_mod_ideal(rs, *sol.normalized_psi, center::appendix_psi(p)).verdict ==
                        Match::Proportional;
        v.require(prop, "solver element not proportional to the appendix element");
        v.require(clock.seconds() < kAppendixBudget, "time budget");
        v.detail << " seed " << seed << ": dim " << sol.solution_dim << (prop ? ", proportional" : ", distinct")
                 << " (" << clock.seconds() << " s);";
    }
}

void table_elements(Verdict& v) {
    bool e7_printed_ok = true, others_ok = true;
    for (const auto& ws : {WeightSystem::E6(), WeightSystem::E7()}) {
        RationalSampler rng(ws.c() == 1 ? 31 : 37);
        int central = 0, proportional = 0, corrected_central = 0, corrected_proportional = 0;
        for (int i = 0; i < 3; ++i) {
            auto [t, c] = generic_tc(ws, rng);
            auto rs = standard_relations(ws, ncalg::leading_params(ws, t, c));
            auto psi = center::table_psi(ws, t, c);
            auto sol = center::centralizer(rs, ws.d(), Mode::Graded);
            bool dim_ok = sol.solution_dim == 1 && sol.normalized_psi;
            others_ok = others_ok && dim_ok;
            if (center::verify_central(rs, psi)) ++central;
            if (dim_ok && center::compare_mod_ideal(rs, *sol.normalized_psi, psi).verdict == Match::Proportional)
                ++proportional;
            if (ws.c() == 2) {
                auto fixed = center::table_psi_e7_sign_corrected(t, c);
                if (center::verify_central(rs, fixed)) ++corrected_central;
                if (dim_ok &&
                    center::compare_mod_ideal(rs, *sol.normalized_psi, fixed).verdict == Match::Proportional)
                    ++corrected_proportional;
            }
        }
        bool ok = central == 3 && proportional == 3;
        v.detail << " " << type_name(ws) << " printed element: central " << central << "/3, proportional "
                 << proportional << "/3;";
        if (ws.c() == 1) {
            others_ok = others_ok && ok;
        } else {
            e7_printed_ok = ok;
            others_ok = others_ok && corrected_central == 3 && corrected_proportional == 3;
            v.detail << " E7 with the c^2 y^4 sign reversed: central " << corrected_central << "/3, proportional "
                     << corrected_proportional << "/3;";
        }
    }
    v.pass = e7_printed_ok && others_ok;
    if (!e7_printed_ok && others_ok) {
        v.known = true;
        v.detail << " known conflict: the printed E7 element is not central";
    }
}

void e8_self_consistency(Verdict& v) {
    RationalSampler rng(47);
    auto ws = WeightSystem::E8();
    auto full = ncalg::random_params(ws, rng);
    auto lead_rs = standard_relations(ws, ncalg::leading_params(ws, full.t, full.c));
    auto graded = center::centralizer(lead_rs, 6, Mode::Graded);
    v.require(graded.solution_dim == 1 && graded.normalized_psi.has_value(), "graded dim " +
                                                                                 std::to_string(graded.solution_dim));
    if (graded.normalized_psi) v.require(center::verify_central(lead_rs, *graded.normalized_psi), "verify_central");

    auto rs = standard_relations(ws, full);
    auto filtered = center::centralizer(rs, 6, Mode::Filtered);
    v.require(filtered.solution_dim == 2, "filtered dim " + std::to_string(filtered.solution_dim));
    if (filtered.normalized_psi && graded.normalized_psi) {
        auto top = filtered.normalized_psi->homogeneous_part(ws, 6);
        v.require(center::compare_mod_ideal(lead_rs, top, *graded.normalized_psi).verdict == Match::Proportional,
                  "filtered leading part not proportional to the graded element");
    }
    v.detail << " graded dim " << graded.solution_dim << ", central; filtered dim " << filtered.solution_dim
             << ", leading part proportional";
}

void quotient_by_center(Verdict& v) {
    RationalSampler rng(53);
    for (const auto& ws : {WeightSystem::E6(), WeightSystem::E7()}) {
        auto [t, c] = generic_tc(ws, rng);
        auto rs = standard_relations(ws, ncalg::leading_params(ws, t, c));
        // E7 uses the sign-corrected element; the printed one is not central.
        auto psi = ws.c() == 1 ? center::table_psi(ws, t, c) : center::table_psi_e7_sign_corrected(t, c);
        int n = 2 * ws.d();
        auto got = as_ll(gridal::quotient_by_center_dims(rs, psi, n));
        auto expect = central_quotient_series(ws, n);
        v.require(got == expect, std::string(type_name(ws)) + " dims " + list(got));
        v.detail << " " << type_name(ws) << ": " << list(got) << ";";
    }
}

void jacobi_milnor(Verdict& v) {
    const std::vector<std::vector<int>> printed{{1, 3, 3, 1}, {1, 2, 3, 2, 1}, {1, 1, 2, 2, 2, 1, 1}};
    const std::vector<int> totals{8, 9, 10};
    Clock clock;
    bool e6_ok = true, tau2_ok = true;
    for (std::size_t k = 0; k < kTypes.size(); ++k) {
        const auto& ws = kTypes[k];
        std::vector<int> saito_dims;
        for (long long x : as_ll(series::saito(ws.a(), ws.b(), ws.c(), ws.d()).quotient->coeffs()))
            saito_dims.push_back(static_cast<int>(x));
        auto formula = series::milnor_formula(ws.a(), ws.b(), ws.c(), ws.d());
        auto matches = [&](const poisson::JacobiReport& r) {
            return r.finite && r.graded_dims == printed[k] && r.graded_dims == saito_dims && r.mu &&
                   *r.mu == totals[k] && Rational(*r.mu) == formula;
        };
        auto at1 = poisson::jacobi_ring(canonical_phi(ws, 1), ws);
        auto at2 = poisson::jacobi_ring(canonical_phi(ws, 2), ws);
        v.detail << " " << type_name(ws) << " tau=1: "
                 << (at1.finite ? "(" + list(at1.graded_dims) + ") total " + std::to_string(*at1.mu) : "not finite")
                 << ", tau=2: (" << list(at2.graded_dims) << ");";
        if (k == 0) e6_ok = matches(at1);
        else v.require(matches(at1), std::string(type_name(ws)) + " at tau=1");
        tau2_ok = tau2_ok && matches(at2);
    }
    bool in_time = clock.seconds() < kJacobiBudget;
    v.detail << " " << clock.seconds() << " s";
    if (!e6_ok || !tau2_ok || !in_time) {
        v.pass = false;
        return;
    }
    if (!v.pass) {
        v.known = true;
        v.detail << "; known conflict: the E7 and E8 curves are singular at tau = 1";
    }
}

void mu_chain(Verdict& v) {
    const std::vector<int> totals{8, 9, 10};
    for (std::size_t k = 0; k < kTypes.size(); ++k) {
        const auto& ws = kTypes[k];
        auto mu = poisson::milnor_number(ws, ws.d()).mu;
        auto legs = ncalg::leg_exponents(ws);
        auto hh2 = series::hh2_nonpositive_dim(ws);
        v.require(mu == totals[k] && mu == legs.p + legs.q + legs.r - 1 && Rational(hh2) == mu,
                  std::string(type_name(ws)));
        v.detail << " " << type_name(ws) << ": " << mu << " = " << legs.p + legs.q + legs.r - 1 << " = " << hh2 << ";";
    }
}

void classification(Verdict& v) {
    using classify::WeightTriple;
    auto found = classify::enumerate_elliptic(20);
    v.require(found == std::vector<WeightTriple>{{1, 1, 1}, {1, 1, 2}, {1, 2, 3}}, "enumeration");

    struct Row {
        int a, b, c, d;
        classify::Verdict verdict;
        int p, q, r;
    };
    for (auto row : {Row{1, 1, 1, 3, classify::Verdict::E6, 3, 3, 3}, Row{1, 1, 2, 4, classify::Verdict::E7, 4, 4, 2},
                     Row{1, 2, 3, 6, classify::Verdict::E8, 6, 3, 2}}) {
        auto res = classify::classify_weights(row.a, row.b, row.c);
        bool ok = res.verdict == row.verdict && res.d == row.d && res.p == row.p && res.q == row.q &&
                  res.r == row.r && res.legs() == std::vector<int>{row.p - 1, row.q - 1, row.r - 1};
        v.require(ok, std::string("table row ") + classify::verdict_name(row.verdict));
    }

    struct Case {
        int a, b, c;
        std::optional<int> d;
    };
    const std::vector<Case> rational{{1, 1, 3, 5}, {2, 2, 3, {}}, {3, 4, 6, {}}, {4, 6, 9, {}}, {1, 2, 2, {}},
                                     {1, 1, 4, {}}, {1, 3, 4, {}}, {2, 3, 4, {}},  {2, 3, 5, {}}, {3, 5, 7, {}},
                                     {1, 1, 1, 2}};
    int hits = 0;
    for (const auto& k : rational)
        if (classify::classify_weights(k.a, k.b, k.c, k.d).verdict == classify::Verdict::Rational) ++hits;
    v.require(hits == static_cast<int>(rational.size()), "rational cases");
    v.detail << " elliptic triples up to 20: " << found.size() << "; table rows with p,q,r and legs; rational "
             << hits << "/" << rational.size();
}

void factorizations(Verdict& v) {
    Clock clock;
    v.require(matfact::determinant_identity_symbolic(), "symbolic determinant");
    RationalSampler rng(2024);
    int verified = 0, rejected = 0, count = 0;
    while (count < 100) {
        auto pt = matfact::CurvePoint::from_coordinates(rng.nonzero(), rng.nonzero(), rng.nonzero());
        if (!pt.on_curve()) continue;
        ++count;
        if (matfact::verify_factorization(matfact::build_D(pt))) ++verified;
        auto off = matfact::factorization_candidate(pt.alpha, pt.beta, pt.gamma, pt.tau + rng.nonzero());
        if (!matfact::verify_factorization(off)) ++rejected;
    }
    v.require(verified == 100, "on-curve factorizations");
    v.require(rejected == 100, "off-curve control");
    v.require(clock.seconds() < kFactorizationBudget, "time budget");
    v.detail << " determinant identity symbolic; " << verified << "/100 on-curve verified; " << rejected
             << "/100 off-curve rejected; " << clock.seconds() << " s";
}

CommPoly random_poly(RationalSampler& rng, std::mt19937& gen, int max_deg, int terms) {
    CommPoly f;
    std::uniform_int_distribution<int> e(0, max_deg);
    for (int i = 0; i < terms; ++i) {
        CommPoly::Exponent ex{e(gen), e(gen), e(gen)};
        while (ex[0] + ex[1] + ex[2] > max_deg) --ex[std::max_element(ex.begin(), ex.end()) - ex.begin()];
        f.add_term(ex, rng.nonzero());
    }
    return f;
}

void poisson_invariants(Verdict& v) {
    RationalSampler rng(61, 1000, 100);
    std::mt19937 gen(62);
    int good = 0;
    for (int i = 0; i < 50; ++i) {
        poisson::PoissonStructure ps{random_poly(rng, gen, 6, 6), WeightSystem::E6()};
        if (poisson::jacobi_identity_check(ps) && poisson::casimir_check(ps)) ++good;
    }
    v.require(good == 50, "Jacobi or Casimir");

    CommPoly x = var_x(), y = var_y(), z = var_z();
    auto exact = poisson::frobenius_and_unimodularity(poisson::exterior_derivative(x * x * y + z.pow(3) - x * y * z));
    auto xdy = poisson::frobenius_and_unimodularity({{CommPoly(), x, CommPoly()}});
    auto mixed = poisson::frobenius_and_unimodularity({{z, x, CommPoly()}});
    v.require(exact.poisson && exact.unimodular, "d phi");
    v.require(xdy.poisson && !xdy.unimodular, "x dy");
    v.require(!mixed.poisson && !mixed.unimodular && mixed.alpha_dalpha == x, "z dx + x dy");
    v.detail << " " << good << "/50 random potentials; d phi {true,true}, x dy {true,false}, z dx + x dy {false,false}";
}

void series_formulas(Verdict& v) {
    auto e6 = WeightSystem::E6();
    auto hh2 = as_ll(series::hh_series(2, e6, 3).range(-2, 3));
    v.require(hh2 == std::vector<long long>{3, 3, 2, 3, 3, 2}, "HH2 " + list(hh2));
    auto hh0 = as_ll(series::hh_series(0, e6, 12).range(0, 12));
    std::vector<long long> indicator;
    for (int k = 0; k <= 12; ++k) indicator.push_back(k % 3 == 0);
    v.require(hh0 == indicator, "HH0 " + list(hh0));

    auto b6 = as_ll(series::ph_Bphi_dims(e6, 4));
    auto b7 = as_ll(series::ph_Bphi_dims(WeightSystem::E7(), 4));
    auto kl = as_ll(series::ph_Bphi_dims(WeightSystem(1, 1, 1, 2), 3));
    v.require(b6 == std::vector<long long>{1, 1, 9, 8, 8}, "B E6");
    v.require(b7 == std::vector<long long>{1, 1, 10, 9, 9}, "B E7");
    v.require(kl == std::vector<long long>{1, 0, 1, 1}, "B (1,1,1,2)");
    const std::vector<std::vector<long long>> ranks{{1, 1, 8, 8}, {1, 1, 9, 9}, {1, 1, 10, 10}};
    for (std::size_t k = 0; k < kTypes.size(); ++k)
        v.require(as_ll(series::ph_Aphi_ranks(kTypes[k]).ranks) == ranks[k],
                  std::string("A ranks ") + type_name(kTypes[k]));
    v.detail << " HH2 from -2: " << list(hh2) << "; HH0: " << list(hh0) << "; B E6 " << list(b6) << ", E7 "
             << list(b7) << ", (1,1,1,2) " << list(kl) << "; A ranks (1,1,mu,mu)";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Verdict&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "flatness", flatness},
        {2, "appendix central element", appendix},
        {3, "table central elements", table_elements},
        {4, "E8 self-consistency", e8_self_consistency},
        {5, "quotient by the central element", quotient_by_center},
        {6, "Jacobi rings and Milnor numbers", jacobi_milnor},
        {7, "mu-count chain", mu_chain},
        {8, "classification", classification},
        {9, "matrix factorizations", factorizations},
        {10, "Poisson invariants", poisson_invariants},
        {11, "series formulas", series_formulas},
    };

    int unexpected = 0, known = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.pass = false;
            v.known = false;
            v.detail << " [exception: " << e.what() << "]";
        }
        if (!v.pass) (v.known ? known : unexpected)++;
        std::printf("%s criterion %d (%s):%s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria: %d unexpected failures, %d known failures\n", criteria.size(), unexpected, known);
    return unexpected == 0 ? 0 : 1;
}
