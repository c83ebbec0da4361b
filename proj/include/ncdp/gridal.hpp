#ifndef NCDP_GRIDAL_HPP
#define NCDP_GRIDAL_HPP

// Degree-truncated two-sided ideal calculus in the free algebra on x, y, z:
// ideal components, normal forms, quotient dimensions and Hilbert-series
// certificates, all by exact row reduction.

#include "ncdp/ncalg.hpp"
#include "ncdp/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncdp::gridal {

using ncalg::Letter;
using ncalg::NCPoly;
using ncalg::ParameterSet;
using ncalg::Potential;
using ncalg::WeightSystem;
using ncalg::Word;

enum class Mode { Graded, Filtered };

const char* mode_name(Mode m);

class RelationSet {
public:
    // Throws std::invalid_argument on a zero relation.
    RelationSet(std::vector<NCPoly> relations, WeightSystem ws);

    // The cyclic derivatives d_x, d_y, d_z. Vanishing derivatives are left out
    // and listed in diagnostics().
    static RelationSet from_potential(const Potential& phi, const WeightSystem& ws);

    const std::vector<NCPoly>& relations() const { return relations_; }
    const WeightSystem& weights() const { return ws_; }
    bool homogeneous() const { return homogeneous_; }
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }
    void add_diagnostic(std::string note) { diagnostics_.push_back(std::move(note)); }

    // Copy with one extra relation appended.
    RelationSet with(const NCPoly& extra) const;

private:
    std::vector<NCPoly> relations_;
    WeightSystem ws_;
    bool homogeneous_ = true;
    std::vector<std::string> diagnostics_;
};

// yz - t*zy - c*P'(x), zx - t*xz - c*Q'(y), xy - t*yx - c*R'(z).
RelationSet standard_relations(const WeightSystem& ws, const ParameterSet& params);

struct DegreeBasis {
    int m = 0;
    Mode mode = Mode::Graded;
    std::vector<Word> words;  // ascending by (weighted degree, lex)
};

DegreeBasis degree_basis(const WeightSystem& ws, int m, Mode mode);

struct IdealComponent {
    int m = 0;
    Mode mode = Mode::Graded;
    std::size_t span_rank = 0;
    std::vector<NCPoly> reduced_basis;  // monic; pivot word minus its normal form
    std::vector<Word> pivot_words;
};

struct QuotientBasis {
    int m = 0;
    Mode mode = Mode::Graded;
    std::vector<Word> complement_words;  // ascending by (weighted degree, lex)
    std::size_t span_rank = 0;
};

// Truncated quotient A^(m) (graded) or A^{<=m} (filtered) built level by
// level, with the complement of the deglex leading words of the ideal
// component as basis. Level m is spanned by l*b for basis words b of level
// m - weight(l) (plus level m-1 when filtered), cut down by the relations
// times basis words.
class IdealCalculus {
public:
    IdealCalculus(RelationSet rs, Mode mode);
    ~IdealCalculus();
    IdealCalculus(IdealCalculus&&) noexcept;
    IdealCalculus& operator=(IdealCalculus&&) noexcept;

    const RelationSet& relations() const;
    Mode mode() const;

    void extend_to(int m);
    int built_degree() const;

    std::size_t rank(int m);
    std::size_t quotient_dim(int m);
    std::vector<std::size_t> quotient_dims(int n);

    // Unique representative supported on complement words of the level-m
    // component. Throws std::invalid_argument if deg f exceeds m.
    NCPoly normal_form(const NCPoly& f, int m);

    IdealComponent component(int m);
    QuotientBasis quotient_basis(int m);

    // Column-vector view of normal forms for callers that build linear systems:
    // coordinates of normal_form(f, m) on quotient_basis(m).complement_words.
    std::vector<Rational> coordinates(const NCPoly& f, int m);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

IdealComponent ideal_component(const RelationSet& rs, int m, Mode mode);

// Graded: dim A^(m), m = 0..n. Filtered: dim A^{<=m}.
std::vector<std::size_t> quotient_dims(const RelationSet& rs, int n, Mode mode);

NCPoly normal_form(const NCPoly& f, const RelationSet& rs, int m, Mode mode);

// First differences of cumulative dimensions.
std::vector<std::size_t> first_differences(const std::vector<std::size_t>& cumulative);

struct HilbertReport {
    bool pass = false;
    Mode mode = Mode::Graded;
    int max_degree = 0;
    std::vector<std::size_t> expected;  // coefficients of 1/prod(1-u^w)
    std::vector<std::size_t> actual;    // graded dims (first differences in filtered mode)
    std::vector<std::size_t> cumulative;  // filtered mode only
    std::optional<int> first_failure;
    std::vector<std::string> diagnostics;
};

// Default truncation 2d + 2.
int default_certificate_degree(const WeightSystem& ws);

// Compares graded dims (graded mode for homogeneous relations, associated
// graded of the filtration otherwise) with the weighted polynomial ring.
// Passing is necessary for the Calabi-Yau property, not sufficient.
HilbertReport hilbert_certificate(const RelationSet& rs, int n);

// Graded dims of A / <<psi>> for homogeneous relations and homogeneous psi.
std::vector<std::size_t> quotient_by_center_dims(const RelationSet& rs, const NCPoly& psi, int n);

}  // namespace ncdp::gridal

#endif  // NCDP_GRIDAL_HPP
