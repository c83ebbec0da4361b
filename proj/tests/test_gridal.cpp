#include "ncdp/center.hpp"
#include "ncdp/gridal.hpp"
#include "ncdp/series.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ncdp;
using namespace ncdp::gridal;

namespace {

NCPoly w(const char* s, const Rational& c = 1) { return NCPoly(Word::parse(s), c); }

RelationSet commutative() {
    return RelationSet::from_potential(ncalg::Potential::project(w("xyz") - w("yxz")), WeightSystem::E6());
}

std::vector<std::size_t> expected_dims(const WeightSystem& ws, int n) {
    auto counts = oracle::monomial_counts({ws.a(), ws.b(), ws.c()}, n);
    return {counts.begin(), counts.end()};
}

std::vector<std::size_t> partial_sums(const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out;
    std::size_t s = 0;
    for (auto x : v) out.push_back(s += x);
    return out;
}

RelationSet random_standard(const WeightSystem& ws, std::uint64_t seed, bool leading) {
    RationalSampler rng(seed);
    return standard_relations(ws, ncalg::random_params(ws, rng, leading));
}

NCPoly random_poly(const WeightSystem& ws, RationalSampler& rng, std::mt19937& gen, int max_deg, int terms) {
    NCPoly f;
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int i = 0; i < terms; ++i) {
        auto words = ncalg::words_of_degree(ws, deg(gen));
        if (words.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        f.add_term(words[pick(gen)], rng.nonzero());
    }
    return f;
}

}  // namespace

TEST_CASE("relation sets") {
    CHECK_THROWS_AS(RelationSet({NCPoly()}, WeightSystem::E6()), std::invalid_argument);
    auto rs = RelationSet::from_potential(ncalg::Potential::project(w("xxx")), WeightSystem::E6());
    CHECK(rs.relations().size() == 1);
    CHECK(rs.diagnostics().size() == 2);
    auto std6 = random_standard(WeightSystem::E6(), 1, true);
    CHECK(std6.homogeneous());
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std6.relations()[i].degree(WeightSystem::E6()) == 2);
    CHECK_FALSE(random_standard(WeightSystem::E6(), 1, false).homogeneous());
    CHECK(commutative().with(w("x")).relations().size() == 4);
}

TEST_CASE("degree bases") {
    auto ws = WeightSystem::E8();
    for (int m = 0; m <= 7; ++m) {
        auto g = degree_basis(ws, m, Mode::Graded);
        auto f = degree_basis(ws, m, Mode::Filtered);
        CHECK(g.words.size() == ncalg::word_count(ws, m));
        std::size_t total = 0;
        for (int k = 0; k <= m; ++k) total += ncalg::word_count(ws, k);
        CHECK(f.words.size() == total);
    }
}

TEST_CASE("ideal components of the commutative potential") {
    auto rs = commutative();
    CHECK(ideal_component(rs, 2, Mode::Graded).span_rank == 3);
    CHECK(ideal_component(rs, 3, Mode::Graded).span_rank == 17);
    RelationSet empty({}, WeightSystem::E6());
    CHECK(ideal_component(empty, 3, Mode::Graded).span_rank == 0);
    CHECK(ideal_component(empty, 3, Mode::Filtered).span_rank == 0);

    auto comp = ideal_component(rs, 2, Mode::Graded);
    CHECK(comp.pivot_words.size() == 3);
    for (const auto& r : comp.reduced_basis) CHECK(normal_form(r, rs, 2, Mode::Graded).is_zero());
}

TEST_CASE("quotient dimensions") {
    Rational t = make_rational(17, 5), c = make_rational(-3, 11);
    auto e6 = WeightSystem::E6();
    auto rs6 = standard_relations(e6, ncalg::leading_params(e6, t, c));
    CHECK(quotient_dims(rs6, 8, Mode::Graded) == std::vector<std::size_t>{1, 3, 6, 10, 15, 21, 28, 36, 45});

    auto e8 = WeightSystem::E8();
    auto rs8 = standard_relations(e8, ncalg::leading_params(e8, t, c));
    CHECK(quotient_dims(rs8, 8, Mode::Graded) == std::vector<std::size_t>{1, 1, 2, 3, 4, 5, 7, 8, 10});

    auto full6 = random_standard(e6, 4, false);
    CHECK(quotient_dims(full6, 3, Mode::Filtered) == std::vector<std::size_t>{1, 4, 10, 20});
    CHECK_THROWS_AS(quotient_dims(full6, 3, Mode::Graded), std::invalid_argument);
}

TEST_CASE("normal forms") {
    auto rs = commutative();
    CHECK(normal_form(w("xy") - w("yx"), rs, 2, Mode::Graded).is_zero());

    Rational t = make_rational(13, 7), c = make_rational(5, 3);
    auto e6 = WeightSystem::E6();
    auto rs6 = standard_relations(e6, ncalg::leading_params(e6, t, c));
    IdealCalculus ic(rs6, Mode::Graded);
    NCPoly target = (w("xy") - c * w("zz")) * (1 / t);
    CHECK(ic.normal_form(w("yx"), 2) == ic.normal_form(target, 2));

    auto basis = ic.quotient_basis(3);
    for (const auto& b : basis.complement_words) CHECK(ic.normal_form(NCPoly(b), 3) == NCPoly(b));
    CHECK_THROWS_AS(ic.normal_form(w("xyzx"), 3), std::invalid_argument);
}

TEST_CASE("hilbert certificates") {
    Rational t = make_rational(-7, 2), c = make_rational(9, 4);
    auto e7 = WeightSystem::E7();
    auto rep = hilbert_certificate(standard_relations(e7, ncalg::leading_params(e7, t, c)), 10);
    CHECK(rep.pass);
    CHECK(rep.mode == Mode::Graded);
    CHECK(rep.actual == std::vector<std::size_t>{1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36});
    CHECK(hilbert_certificate(commutative(), 8).pass);

    auto rels = commutative().relations();
    RelationSet dropped({rels[0], rels[1]}, WeightSystem::E6());
    auto bad = hilbert_certificate(dropped, 6);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.first_failure.has_value());
    CHECK(*bad.first_failure == 2);

    auto vanishing = RelationSet::from_potential(ncalg::Potential::project(w("xxx")), WeightSystem::E6());
    auto bad2 = hilbert_certificate(vanishing, 4);
    CHECK_FALSE(bad2.pass);
    CHECK(*bad2.first_failure <= 2);

    auto filtered = hilbert_certificate(random_standard(WeightSystem::E8(), 9, false), 8);
    CHECK(filtered.pass);
    CHECK(filtered.mode == Mode::Filtered);
    CHECK(filtered.cumulative == partial_sums(filtered.actual));
    CHECK(default_certificate_degree(WeightSystem::E7()) == 10);
}

TEST_CASE("quotient by the central element") {
    Rational t = make_rational(5, 2), c = make_rational(-4, 3);
    auto e6 = WeightSystem::E6();
    auto rs6 = standard_relations(e6, ncalg::leading_params(e6, t, c));
    CHECK(quotient_by_center_dims(rs6, center::table_psi(e6, t, c), 6) ==
          std::vector<std::size_t>{1, 3, 6, 9, 12, 15, 18});
    CHECK(quotient_by_center_dims(rs6, NCPoly(Rational(1)), 4) == std::vector<std::size_t>{0, 0, 0, 0, 0});

    auto e7 = WeightSystem::E7();
    auto rs7 = standard_relations(e7, ncalg::leading_params(e7, t, c));
    CHECK(quotient_by_center_dims(rs7, center::table_psi_e7_sign_corrected(t, c), 6) ==
          std::vector<std::size_t>{1, 2, 4, 6, 8, 10, 12});
}

TEST_CASE("agreement with the full echelon oracle") {
    for (auto ws : {WeightSystem::E6(), WeightSystem::E7(), WeightSystem::E8()}) {
        int n = ws == WeightSystem::E6() ? 5 : 7;
        for (bool leading : {true, false}) {
            auto rs = random_standard(ws, 21, leading);
            Mode mode = leading ? Mode::Graded : Mode::Filtered;
            oracle::FullEchelon full(rs, mode);
            IdealCalculus ic(rs, mode);
            CHECK(ic.quotient_dims(n) == full.quotient_dims(n));

            RationalSampler rng(8, 100, 10);
            std::mt19937 gen(2);
            for (int i = 0; i < 10; ++i) {
                NCPoly f = random_poly(ws, rng, gen, n, 6);
                int m = std::max(f.degree(ws), 0);
                if (mode == Mode::Graded) {
                    f = f.homogeneous_part(ws, m);
                    if (f.is_zero()) continue;
                }
                CHECK(ic.normal_form(f, m) == full.normal_form(f, m));
            }
        }
    }
}

TEST_CASE("agreement with the brute-force span") {
    for (auto ws : {WeightSystem::E6(), WeightSystem::E8()}) {
        int n = ws == WeightSystem::E6() ? 4 : 6;
        for (bool leading : {true, false}) {
            auto rs = random_standard(ws, 5, leading);
            Mode mode = leading ? Mode::Graded : Mode::Filtered;
            IdealCalculus ic(rs, mode);
            for (int m = 0; m <= n; ++m) CHECK(ic.rank(m) == oracle::brute_force_rank(rs, m, mode));
        }
    }
}

TEST_CASE("filtered dimensions are partial sums of the associated graded") {
    auto rs = random_standard(WeightSystem::E7(), 12, false);
    IdealCalculus ic(rs, Mode::Filtered);
    auto cum = ic.quotient_dims(9);
    auto diffs = first_differences(cum);
    CHECK(diffs == expected_dims(WeightSystem::E7(), 9));
    CHECK(partial_sums(diffs) == cum);
}

TEST_CASE("complement and rank fill the degree basis") {
    auto rs = random_standard(WeightSystem::E8(), 13, false);
    IdealCalculus ic(rs, Mode::Filtered);
    for (int m = 0; m <= 8; ++m) {
        auto qb = ic.quotient_basis(m);
        CHECK(qb.complement_words.size() + qb.span_rank == degree_basis(WeightSystem::E8(), m, Mode::Filtered).words.size());
        CHECK(qb.span_rank == ic.rank(m));
        auto comp = ic.component(m);
        CHECK(comp.pivot_words.size() == comp.span_rank);
        for (const auto& pw : comp.pivot_words)
            CHECK(std::find(qb.complement_words.begin(), qb.complement_words.end(), pw) == qb.complement_words.end());
    }
}

TEST_CASE("order independence") {
    for (auto ws : {WeightSystem::E6(), WeightSystem::E7()}) {
        auto rs = random_standard(ws, 31, false);
        auto rels = rs.relations();
        int n = ws == WeightSystem::E6() ? 6 : 8;
        auto ref = quotient_dims(rs, n, Mode::Filtered);
        std::sort(rels.begin(), rels.end(), [](const NCPoly& a, const NCPoly& b) { return a.size() < b.size(); });
        do {
            std::vector<NCPoly> scaled;
            Rational s = 3;
            for (const auto& r : rels) scaled.push_back(r * (s = -s / 2));
            CHECK(quotient_dims(RelationSet(scaled, ws), n, Mode::Filtered) == ref);
        } while (std::next_permutation(rels.begin(), rels.end(),
                                       [](const NCPoly& a, const NCPoly& b) { return a.terms() < b.terms(); }));
    }
}

TEST_CASE("ideal absorption") {
    for (auto ws : {WeightSystem::E6(), WeightSystem::E8()}) {
        auto rs = random_standard(ws, 41, false);
        IdealCalculus ic(rs, Mode::Filtered);
        int bound = ws == WeightSystem::E6() ? 5 : 8;
        for (const auto& r : rs.relations()) {
            int dr = r.degree(ws);
            for (int du = 0; du + dr <= bound; ++du)
                for (const auto& u : ncalg::words_of_degree(ws, du))
                    for (int dv = 0; du + dv + dr <= bound; ++dv)
                        for (const auto& v : ncalg::words_of_degree(ws, dv))
                            CHECK(ic.normal_form(NCPoly(u) * r * NCPoly(v), bound).is_zero());
        }
    }
}

TEST_CASE("normal form is linear and idempotent") {
    auto ws = WeightSystem::E7();
    auto rs = random_standard(ws, 51, false);
    IdealCalculus ic(rs, Mode::Filtered);
    RationalSampler rng(3, 100, 10);
    std::mt19937 gen(9);
    for (int i = 0; i < 20; ++i) {
        NCPoly f = random_poly(ws, rng, gen, 7, 5), g = random_poly(ws, rng, gen, 7, 5);
        Rational a = rng.nonzero();
        CHECK(ic.normal_form(f + a * g, 7) == ic.normal_form(f, 7) + a * ic.normal_form(g, 7));
        CHECK(ic.normal_form(ic.normal_form(f, 7), 7) == ic.normal_form(f, 7));
        auto coords = ic.coordinates(f, 7);
        auto words = ic.quotient_basis(7).complement_words;
        REQUIRE(coords.size() == words.size());
        NCPoly rebuilt;
        for (std::size_t k = 0; k < words.size(); ++k) rebuilt.add_term(words[k], coords[k]);
        CHECK(rebuilt == ic.normal_form(f, 7));
    }
}

TEST_CASE("flatness across generic parameters") {
    for (auto ws : {WeightSystem::E6(), WeightSystem::E7(), WeightSystem::E8()}) {
        int n = ws == WeightSystem::E6() ? 5 : ws == WeightSystem::E7() ? 7 : 9;
        std::vector<std::size_t> first;
        for (std::uint64_t seed = 100; seed < 105; ++seed) {
            auto dims = quotient_dims(random_standard(ws, seed, false), n, Mode::Filtered);
            if (first.empty()) first = dims;
            CHECK(dims == first);
        }
        CHECK(first_differences(first) == expected_dims(ws, n));
    }
}
