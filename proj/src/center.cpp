#include "ncdp/center.hpp"

#include "ncdp/linalg.hpp"

#include <algorithm>

namespace ncdp::center {

using ncalg::Letter;
using ncalg::Word;

namespace {

NCPoly w(std::string_view letters) { return NCPoly(Word::parse(letters)); }

Mode natural_mode(const RelationSet& rs, const NCPoly& f) {
    return rs.homogeneous() && f.is_homogeneous(rs.weights()) ? Mode::Graded : Mode::Filtered;
}

NCPoly strip_constant(NCPoly f) {
    Rational c = f.coefficient(Word());
    if (c != 0) f.add_term(Word(), -c);
    return f;
}

// Scale so that the first nonzero coefficient in ascending order is 1.
NCPoly normalize_first(NCPoly f) {
    if (f.is_zero()) return f;
    Rational inv = 1 / f.terms().begin()->second;
    return f * inv;
}

}  // namespace

CentralizerSolution centralizer(const RelationSet& rs, int bound, Mode mode) {
    IdealCalculus ic(rs, mode);
    return centralizer(ic, bound);
}

CentralizerSolution centralizer(IdealCalculus& ic, int bound) {
    const auto& ws = ic.relations().weights();
    CentralizerSolution sol;
    sol.degree_bound = bound;
    sol.mode = ic.mode();
    sol.diagnostics = ic.relations().diagnostics();
    ic.extend_to(bound + ws.max_weight());

    auto unknowns = ic.quotient_basis(bound).complement_words;
    linalg::Matrix rows;
    for (Letter l : ncalg::kLetters) {
        NCPoly v = NCPoly::letter(l);
        int level = bound + ws.weight(l);
        std::vector<std::vector<Rational>> cols;
        for (const auto& b : unknowns) cols.push_back(ic.coordinates(commutator(v, NCPoly(b)), level));
        std::size_t height = cols.empty() ? 0 : cols.front().size();
        for (std::size_t i = 0; i < height; ++i) {
            std::vector<Rational> row;
            row.reserve(unknowns.size());
            bool nonzero = false;
            for (const auto& c : cols) {
                row.push_back(c[i]);
                nonzero = nonzero || c[i] != 0;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    for (const auto& v : linalg::nullspace(rows, unknowns.size())) {
        NCPoly f;
        for (std::size_t i = 0; i < unknowns.size(); ++i)
            if (v[i] != 0) f.add_term(unknowns[i], v[i]);
        sol.basis.push_back(std::move(f));
    }
    sol.solution_dim = sol.basis.size();

    // Non-constant part of the solution space.
    std::vector<Word> nonconst;
    for (const auto& b : unknowns)
        if (!b.empty()) nonconst.push_back(b);
    linalg::Matrix proj;
    for (const auto& f : sol.basis) {
        std::vector<Rational> row;
        for (const auto& b : nonconst) row.push_back(f.coefficient(b));
        proj.push_back(std::move(row));
    }
    auto ech = linalg::rref(proj, nonconst.size());
    if (ech.rows.size() == 1) {
        NCPoly psi;
        for (std::size_t i = 0; i < nonconst.size(); ++i)
            if (ech.rows[0][i] != 0) psi.add_term(nonconst[i], ech.rows[0][i]);
        sol.normalized_psi = normalize_first(std::move(psi));
    }
    std::size_t generic = sol.mode == Mode::Filtered ? 2 : 1;
    if (sol.solution_dim > generic)
        sol.diagnostics.push_back("solution space of dimension " + std::to_string(sol.solution_dim) +
                                  " exceeds the generic value " + std::to_string(generic) +
                                  ": non-generic parameters");
    else if (sol.solution_dim < generic)
        sol.diagnostics.push_back("no nonscalar central element up to degree " + std::to_string(bound));
    return sol;
}

bool verify_central(IdealCalculus& ic, const NCPoly& psi) {
    const auto& ws = ic.relations().weights();
    int d = std::max(psi.degree(ws), 0);
    for (Letter l : ncalg::kLetters) {
        NCPoly comm = commutator(NCPoly::letter(l), psi);
        if (!ic.normal_form(comm, d + ws.weight(l)).is_zero()) return false;
    }
    return true;
}

bool verify_central(const RelationSet& rs, const NCPoly& psi) {
    IdealCalculus ic(rs, natural_mode(rs, psi));
    return verify_central(ic, psi);
}

const char* match_name(Match m) {
    switch (m) {
        case Match::Equal: return "equal";
        case Match::Proportional: return "proportional";
        case Match::Distinct: return "distinct";
    }
    return "?";
}

Comparison compare_mod_ideal(const RelationSet& rs, const NCPoly& a, const NCPoly& b) {
    const auto& ws = rs.weights();
    Mode mode = natural_mode(rs, a) == Mode::Graded && natural_mode(rs, b) == Mode::Graded &&
                        a.degree(ws) == b.degree(ws)
                    ? Mode::Graded
                    : Mode::Filtered;
    IdealCalculus ic(rs, mode);
    int m = std::max({a.degree(ws), b.degree(ws), 0});
    NCPoly na = ic.normal_form(a, m), nb = ic.normal_form(b, m);
    Comparison out;
    if (na == nb) {
        out.verdict = Match::Equal;
        out.scalar = Rational(1);
        return out;
    }
    na = strip_constant(std::move(na));
    nb = strip_constant(std::move(nb));
    if (na.is_zero() || nb.is_zero() || na.size() != nb.size()) return out;
    const auto& [wa, ca] = *na.terms().begin();
    Rational cb = nb.coefficient(wa);
    if (cb == 0) return out;
    Rational s = ca / cb;
    if (na == s * nb) {
        out.verdict = Match::Proportional;
        out.scalar = s;
    }
    return out;
}

AppendixParams AppendixParams::random(RationalSampler& rng) {
    AppendixParams p;
    p.q = rng.nonzero();
    p.t = rng.nonzero();
    p.a1 = rng();
    p.a2 = rng();
    p.b1 = rng();
    p.b2 = rng();
    p.c1 = rng();
    p.c2 = rng();
    return p;
}

RelationSet appendix_relations(const AppendixParams& p) {
    NCPoly x = w("x"), y = w("y"), z = w("z");
    std::vector<NCPoly> rels{
        x * y - p.q * (y * x) - p.t * (z * z) + p.c1 * z + NCPoly(p.c2),
        y * z - p.q * (z * y) - p.t * (x * x) + p.a1 * x + NCPoly(p.a2),
        z * x - p.q * (x * z) - p.t * (y * y) + p.b1 * y + NCPoly(p.b2),
    };
    return RelationSet(std::move(rels), WeightSystem::E6());
}

NCPoly appendix_psi(const AppendixParams& p) {
    const Rational &q = p.q, &t = p.t, &a1 = p.a1, &a2 = p.a2, &b1 = p.b1, &b2 = p.b2, &c1 = p.c1, &c2 = p.c2;
    Rational t3 = t * t * t, q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    NCPoly psi;
    psi += t * (q + 1) * (t * (t3 + 1) * w("yyy") + (q3 - t3) * w("yzx") - q * (t3 + 1) * w("zyx") +
                          t * (q3 - t3) * w("zzz"));
    psi -= t * (q2 + q * t3 + q + 2 * t3 + 1) * b1 * w("yy");
    psi += (q * t3 - q2) * a1 * w("yz") + t3 * (q + 1) * b1 * w("zx") + (q3 + q * t3) * a1 * w("zy");
    psi += q * (q + 1) * t3 * c1 * w("yx") + t * (2 * q * t3 + t3 - q4 - q3 - q2) * c1 * w("zz");
    psi -= ((q3 * t + 2 * q2 * t + q * t) * a2 + q2 * a1 * a1 + q * t * t * b1 * c1) * w("x");
    psi -= t * ((q3 + 2 * q2 + q * t3 + 2 * q + t3 + 1) * b2 + q * t * a1 * c1 - t * t * b1 * b1) * w("y");
    psi -= t * ((q4 + 2 * q3 + 2 * q2 - q * t3 + q - t3) * c2 + q * t * t * c1 * c1 + q * t * a1 * b1) * w("z");
    return psi;
}

NCPoly table_psi(const WeightSystem& ws, const Rational& t, const Rational& c) {
    if (ws == WeightSystem::E6()) {
        Rational den = c * c * c + 1;
        if (den == 0) throw NonGenericParameters("table_psi: c^3 = -1");
        Rational k = (t * t * t - c * c * c) / den;
        return c * w("yyy") + k * (w("yzx") + c * w("zzz")) - t * w("zyx");
    }
    if (ws == WeightSystem::E7()) {
        Rational den = t * t - c * c * c * c;
        if (den == 0) throw NonGenericParameters("table_psi: t^2 = c^4");
        Rational k = (t * t * t * t + t * t + 1) / den;
        return (t * t + 1) * w("xyxy") - k * (t * w("xyyx") + c * c * w("yyyy")) + t * w("yyxx");
    }
    throw std::invalid_argument("table_psi: closed form known only for E6 and E7 weights");
}

NCPoly table_psi_e7_sign_corrected(const Rational& t, const Rational& c) {
    Rational den = t * t - c * c * c * c;
    if (den == 0) throw NonGenericParameters("table_psi: t^2 = c^4");
    Rational k = (t * t * t * t + t * t + 1) / den;
    return (t * t + 1) * w("xyxy") - k * t * w("xyyx") + k * c * c * w("yyyy") + t * w("yyxx");
}

}  // namespace ncdp::center
