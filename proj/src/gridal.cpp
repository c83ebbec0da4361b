#include "ncdp/gridal.hpp"

#include "ncdp/series.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <deque>
#include <set>
#include <stdexcept>

namespace ncdp::gridal {

const char* mode_name(Mode m) { return m == Mode::Graded ? "graded" : "filtered"; }

RelationSet::RelationSet(std::vector<NCPoly> relations, WeightSystem ws) : relations_(std::move(relations)), ws_(ws) {
    for (const auto& r : relations_) {
        if (r.is_zero()) throw std::invalid_argument("RelationSet: zero relation");
        if (!r.is_homogeneous(ws_)) homogeneous_ = false;
    }
}

RelationSet RelationSet::from_potential(const Potential& phi, const WeightSystem& ws) {
    std::vector<NCPoly> rels;
    std::vector<std::string> diag;
    for (Letter l : ncalg::kLetters) {
        NCPoly r = ncalg::cyclic_derivative(phi, l);
        if (r.is_zero())
            diag.push_back(std::string("cyclic derivative d_") + ncalg::letter_char(l) + " vanishes identically");
        else
            rels.push_back(std::move(r));
    }
    RelationSet rs(std::move(rels), ws);
    for (auto& d : diag) rs.add_diagnostic(std::move(d));
    return rs;
}

RelationSet RelationSet::with(const NCPoly& extra) const {
    auto rels = relations_;
    rels.push_back(extra);
    RelationSet rs(std::move(rels), ws_);
    rs.diagnostics_ = diagnostics_;
    return rs;
}

RelationSet standard_relations(const WeightSystem& ws, const ParameterSet& params) {
    using ncalg::derivative_coeffs;
    using ncalg::univariate;
    NCPoly x = NCPoly::letter(Letter::X), y = NCPoly::letter(Letter::Y), z = NCPoly::letter(Letter::Z);
    std::vector<NCPoly> candidates{
        y * z - params.t * (z * y) - params.c * univariate(Letter::X, derivative_coeffs(params.P)),
        z * x - params.t * (x * z) - params.c * univariate(Letter::Y, derivative_coeffs(params.Q)),
        x * y - params.t * (y * x) - params.c * univariate(Letter::Z, derivative_coeffs(params.R)),
    };
    std::vector<NCPoly> rels;
    std::vector<std::string> diag;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].is_zero())
            diag.push_back("relation " + std::to_string(i) + " vanishes identically");
        else
            rels.push_back(std::move(candidates[i]));
    }
    RelationSet rs(std::move(rels), ws);
    for (auto& d : diag) rs.add_diagnostic(std::move(d));
    return rs;
}

DegreeBasis degree_basis(const WeightSystem& ws, int m, Mode mode) {
    DegreeBasis b;
    b.m = m;
    b.mode = mode;
    for (int k = (mode == Mode::Graded ? m : 0); k <= m; ++k) {
        auto w = ncalg::words_of_degree(ws, k);
        b.words.insert(b.words.end(), w.begin(), w.end());
    }
    return b;
}

// ---------------------------------------------------------------------------
//
// Level k of the truncated quotient is W_k modulo relation vectors, where W_k
// is spanned by the level k-1 quotient (filtered mode only) and the words l*b
// with b a top-degree basis word of level k - w(l). Reducing a word of degree
// k therefore only needs the normal form of its tail one level down, and the
// only new vectors are r*b for relations r and top-degree basis words b.

namespace {

struct Key {
    int deg;
    Word w;
};

bool operator<(const Key& a, const Key& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return Word::lex_less(a.w, b.w);
}

// scale * integer entries; the content is pulled into the scale by normalize().
struct Vec {
    Rational scale{1};
    std::map<Key, Integer> e;
    bool empty() const { return e.empty(); }
    Rational at(const Key& k) const {
        auto it = e.find(k);
        return it == e.end() ? Rational(0) : Rational(scale * it->second);
    }
};

void normalize(Vec& v) {
    if (v.e.empty()) {
        v.scale = 1;
        return;
    }
    Integer g = 0;
    for (const auto& [k, c] : v.e) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [k, c] : v.e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    v.scale *= g;
}

// y += a * x
void axpy(Vec& y, const Rational& a, const Vec& x) {
    if (a == 0 || x.empty()) return;
    if (y.empty()) {
        y.scale = a * x.scale;
        y.e = x.e;
        return;
    }
    Rational r = a * x.scale / y.scale;
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    if (q != 1) {
        for (auto& [k, c] : y.e) c *= q;
        y.scale /= q;
    }
    for (const auto& [k, c] : x.e) {
        auto [it, fresh] = y.e.try_emplace(k);
        mpz_addmul(it->second.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
        if (it->second == 0) y.e.erase(it);
    }
    if (y.e.empty()) y.scale = 1;
}

struct Level {
    std::set<Key> basis;
    std::map<Key, Vec> pivots;  // fully reduced, pivot entry 1 included
    bool lower_pivots = false;
    std::array<std::map<Word, Vec>, 3> top;    // NF(l*b) for top-degree basis words b of level k - w(l)
    std::array<std::map<Word, Vec>, 3> lower;  // same for lower b, cached when lower_pivots
};

Vec reduce(Vec v, const Level& L) {
    if (L.pivots.empty()) return v;
    std::vector<std::pair<const Vec*, Rational>> hits;
    for (const auto& [k, c] : v.e) {
        auto it = L.pivots.find(k);
        if (it != L.pivots.end()) hits.emplace_back(&it->second, -(v.scale * c));
    }
    if (hits.empty()) return v;
    for (const auto& [row, c] : hits) axpy(v, c, *row);
    normalize(v);
    return v;
}

Vec unit_vec(Key k) {
    Vec v;
    v.e.emplace(std::move(k), Integer(1));
    return v;
}

}  // namespace

struct IdealCalculus::Impl {
    RelationSet rs;
    Mode mode;
    WeightSystem ws;
    std::deque<Level> levels;
    std::vector<std::pair<int, NCPoly>> rels;

    Impl(RelationSet r, Mode m) : rs(std::move(r)), mode(m), ws(rs.weights()) {
        if (mode == Mode::Graded && !rs.homogeneous())
            throw std::invalid_argument("graded mode needs homogeneous relations");
        for (const auto& rel : rs.relations()) rels.emplace_back(rel.degree(ws), rel);
    }

    int built() const { return static_cast<int>(levels.size()) - 1; }
    int deg(const Word& w) const { return ncalg::weighted_degree(w, ws); }

    // NF(l*b) at level j for b in the level j - w(l) basis.
    const Vec& table(Letter l, const Key& b, int j) {
        Level& L = levels[j];
        int li = static_cast<int>(l);
        if (b.deg == j - ws.weight(l)) return L.top[li].at(b.w);
        if (!L.lower_pivots) return table(l, b, j - 1);
        auto it = L.lower[li].find(b.w);
        if (it == L.lower[li].end()) it = L.lower[li].emplace(b.w, reduce(table(l, b, j - 1), L)).first;
        return it->second;
    }

    // Image of a word of degree exactly k in W_k, before reduction by level k.
    Vec lift(const Word& u, int k) {
        if (u.length() == 0) return unit_vec({0, Word()});
        Letter l = u[0];
        int src = k - ws.weight(l);
        Vec g = nf_word(u.subword(1, u.length() - 1), src);
        Vec out;
        out.scale = g.scale;
        Word lw = Word::letter(l);
        for (const auto& [b, c] : g.e)
            if (b.deg == src) out.e.emplace(Key{k, lw * b.w}, c);
        for (const auto& [b, c] : g.e)
            if (b.deg != src) axpy(out, g.scale * c, table(l, b, k - 1));
        return out;
    }

    // Normal form of a word at level j; deg u == j in graded mode, <= j otherwise.
    Vec nf_word(const Word& u, int j) {
        int du = deg(u);
        Key key{du, u};
        const Level& L = levels[j];
        if (L.basis.count(key)) return unit_vec(key);
        if (du < j) {
            Vec v = nf_word(u, j - 1);
            return L.lower_pivots ? reduce(std::move(v), L) : v;
        }
        return reduce(lift(u, j), L);
    }

    Vec nf_poly(const NCPoly& f, int m) {
        Vec out;
        for (const auto& [w, c] : f.terms()) axpy(out, c, nf_word(w, mode == Mode::Graded ? deg(w) : m));
        return out;
    }

    void build_level(int k) {
        Level L;
        std::set<Key> coords;
        if (mode == Mode::Filtered && k > 0) coords = levels[k - 1].basis;
        if (k == 0) coords.insert({0, Word()});
        for (Letter l : ncalg::kLetters) {
            int src = k - ws.weight(l);
            if (src < 0) continue;
            for (const auto& b : levels[src].basis)
                if (b.deg == src) coords.insert({k, Word::letter(l) * b.w});
        }

        auto insert = [&](Vec v) {
            v = reduce(std::move(v), L);
            if (v.empty()) return;
            normalize(v);
            auto lead = std::prev(v.e.end());
            Key pk = lead->first;
            v.scale = 1 / Rational(lead->second);
            for (auto& [key, row] : L.pivots) {
                auto it = row.e.find(pk);
                if (it != row.e.end()) {
                    Rational a = -(row.scale * it->second);
                    axpy(row, a, v);
                    normalize(row);
                }
            }
            L.pivots.emplace(pk, std::move(v));
        };

        for (const auto& [dr, r] : rels) {
            int src = k - dr;
            if (src < 0) continue;
            for (const auto& b : levels[src].basis) {
                if (b.deg != src) continue;
                Vec v;
                for (const auto& [t, c] : r.terms()) {
                    Word u = t * b.w;
                    int du = deg(u);
                    axpy(v, c, du == k ? lift(u, k) : nf_word(u, k - 1));
                }
                insert(std::move(v));
            }
        }

        for (const auto& key : coords)
            if (!L.pivots.count(key)) L.basis.insert(key);
        for (const auto& [key, row] : L.pivots)
            if (key.deg < k) L.lower_pivots = true;
        for (Letter l : ncalg::kLetters) {
            int src = k - ws.weight(l);
            if (src < 0) continue;
            auto& tab = L.top[static_cast<int>(l)];
            for (const auto& b : levels[src].basis) {
                if (b.deg != src) continue;
                Word lb = Word::letter(l) * b.w;
                tab.emplace(b.w, reduce(unit_vec({k, lb}), L));
            }
        }
        levels.push_back(std::move(L));
    }

    void extend_to(int m) {
        if (m < 0) throw std::invalid_argument("IdealCalculus: negative degree");
        for (int k = built() + 1; k <= m; ++k) build_level(k);
    }

    std::size_t word_total(int m) const {
        std::size_t n = 0;
        for (int k = (mode == Mode::Graded ? m : 0); k <= m; ++k) n += ncalg::word_count(ws, k);
        return n;
    }

    std::size_t dim(int m) {
        extend_to(m);
        return levels[m].basis.size();
    }

    NCPoly to_poly(const Vec& v) const {
        NCPoly f;
        for (const auto& [k, c] : v.e) f.add_term(k.w, Rational(v.scale * c));
        return f;
    }

    NCPoly normal_form(const NCPoly& f, int m) {
        if (f.degree(ws) > m)
            throw std::invalid_argument("normal_form: degree " + std::to_string(f.degree(ws)) + " exceeds bound " +
                                        std::to_string(m));
        extend_to(m);
        return to_poly(nf_poly(f, m));
    }
};

IdealCalculus::IdealCalculus(RelationSet rs, Mode mode) : impl_(std::make_unique<Impl>(std::move(rs), mode)) {}
IdealCalculus::~IdealCalculus() = default;
IdealCalculus::IdealCalculus(IdealCalculus&&) noexcept = default;
IdealCalculus& IdealCalculus::operator=(IdealCalculus&&) noexcept = default;

const RelationSet& IdealCalculus::relations() const { return impl_->rs; }
Mode IdealCalculus::mode() const { return impl_->mode; }
void IdealCalculus::extend_to(int m) { impl_->extend_to(m); }
int IdealCalculus::built_degree() const { return impl_->built(); }
std::size_t IdealCalculus::rank(int m) { return impl_->word_total(m) - impl_->dim(m); }
std::size_t IdealCalculus::quotient_dim(int m) { return impl_->dim(m); }

std::vector<std::size_t> IdealCalculus::quotient_dims(int n) {
    std::vector<std::size_t> out;
    for (int m = 0; m <= n; ++m) out.push_back(quotient_dim(m));
    return out;
}

NCPoly IdealCalculus::normal_form(const NCPoly& f, int m) { return impl_->normal_form(f, m); }

IdealComponent IdealCalculus::component(int m) {
    impl_->extend_to(m);
    IdealComponent comp;
    comp.m = m;
    comp.mode = impl_->mode;
    const auto& basis = impl_->levels[m].basis;
    for (const auto& w : degree_basis(impl_->ws, m, impl_->mode).words) {
        if (basis.count({impl_->deg(w), w})) continue;
        NCPoly row(w);
        row -= impl_->normal_form(NCPoly(w), m);
        comp.pivot_words.push_back(w);
        comp.reduced_basis.push_back(std::move(row));
    }
    comp.span_rank = comp.pivot_words.size();
    return comp;
}

QuotientBasis IdealCalculus::quotient_basis(int m) {
    impl_->extend_to(m);
    QuotientBasis qb;
    qb.m = m;
    qb.mode = impl_->mode;
    for (const auto& k : impl_->levels[m].basis) qb.complement_words.push_back(k.w);
    qb.span_rank = rank(m);
    return qb;
}

std::vector<Rational> IdealCalculus::coordinates(const NCPoly& f, int m) {
    if (f.degree(impl_->ws) > m) throw std::invalid_argument("coordinates: degree exceeds bound");
    impl_->extend_to(m);
    Vec v = impl_->nf_poly(f, m);
    std::vector<Rational> out;
    const auto& basis = impl_->levels[m].basis;
    out.reserve(basis.size());
    for (const auto& k : basis) out.push_back(v.at(k));
    return out;
}


IdealComponent ideal_component(const RelationSet& rs, int m, Mode mode) {
    IdealCalculus ic(rs, mode);
    return ic.component(m);
}

std::vector<std::size_t> quotient_dims(const RelationSet& rs, int n, Mode mode) {
    IdealCalculus ic(rs, mode);
    return ic.quotient_dims(n);
}

NCPoly normal_form(const NCPoly& f, const RelationSet& rs, int m, Mode mode) {
    IdealCalculus ic(rs, mode);
    return ic.normal_form(f, m);
}

std::vector<std::size_t> first_differences(const std::vector<std::size_t>& cumulative) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        std::size_t prev = i == 0 ? 0 : cumulative[i - 1];
        if (cumulative[i] < prev) throw std::logic_error("first_differences: sequence decreases");
        out.push_back(cumulative[i] - prev);
    }
    return out;
}

int default_certificate_degree(const WeightSystem& ws) { return 2 * ws.d() + 2; }

HilbertReport hilbert_certificate(const RelationSet& rs, int n) {
    HilbertReport rep;
    rep.max_degree = n;
    rep.mode = rs.homogeneous() ? Mode::Graded : Mode::Filtered;
    rep.diagnostics = rs.diagnostics();
    IdealCalculus ic(rs, rep.mode);
    auto dims = ic.quotient_dims(n);
    if (rep.mode == Mode::Filtered) {
        rep.cumulative = dims;
        rep.actual = first_differences(dims);
    } else {
        rep.actual = dims;
    }
    for (const auto& c : series::product_series(rs.weights().weights(), n)) rep.expected.push_back(c.get_ui());
    for (int m = 0; m <= n; ++m) {
        if (rep.actual[m] != rep.expected[m]) {
            rep.first_failure = m;
            break;
        }
    }
    rep.pass = !rep.first_failure.has_value();
    return rep;
}

std::vector<std::size_t> quotient_by_center_dims(const RelationSet& rs, const NCPoly& psi, int n) {
    if (!rs.homogeneous() || !psi.is_homogeneous(rs.weights()))
        throw std::invalid_argument("quotient_by_center_dims: needs homogeneous relations and element");
    return quotient_dims(rs.with(psi), n, Mode::Graded);
}

}  // namespace ncdp::gridal
