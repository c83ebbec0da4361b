#ifndef NCDP_NCALG_HPP
#define NCDP_NCALG_HPP

// Weighted free-algebra arithmetic on the letters x, y, z over exact rationals.

#include "ncdp/commpoly.hpp"
#include "ncdp/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncdp::ncalg {

enum class Letter : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Letter, 3> kLetters{Letter::X, Letter::Y, Letter::Z};

char letter_char(Letter l);
Letter letter_from_char(char ch);  // throws on anything but x, y, z

class WeightSystem {
public:
    // Requires 0 < a <= b <= c and gcd(a, b, c) = 1. The degree d defaults to a+b+c.
    WeightSystem(int a, int b, int c, std::optional<int> d = std::nullopt);

    int a() const { return w_[0]; }
    int b() const { return w_[1]; }
    int c() const { return w_[2]; }
    int d() const { return d_; }
    int varpi() const { return d_ - w_[0] - w_[1] - w_[2]; }
    int weight(Letter l) const { return w_[static_cast<int>(l)]; }
    int max_weight() const { return w_[2]; }
    std::span<const int> weights() const { return w_; }

    static WeightSystem E6() { return {1, 1, 1}; }
    static WeightSystem E7() { return {1, 1, 2}; }
    static WeightSystem E8() { return {1, 2, 3}; }

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::array<int, 3> w_;
    int d_;
};

// A word in x, y, z packed two bits per letter, first letter in the high bits.
// Comparison is by length, then lexicographic with x < y < z.
class Word {
public:
    static constexpr std::size_t kMaxLength = 32;

    Word() = default;
    explicit Word(std::span<const Letter> letters);
    static Word parse(std::string_view letters);  // e.g. "xyz"; "" or "1" is the empty word
    static Word letter(Letter l);

    std::size_t length() const { return len_; }
    bool empty() const { return len_ == 0; }
    Letter operator[](std::size_t i) const {
        return static_cast<Letter>(((code_ >> (62 - 2 * i)) & 3u) - 1);
    }
    std::vector<Letter> letters() const;

    Word concat(const Word& other) const;
    Word rotate(std::size_t k) const;  // moves the first k letters to the end
    Word subword(std::size_t pos, std::size_t count) const;
    std::array<int, 3> letter_counts() const;

    std::string to_string() const;   // "xyz", or "1" for the empty word
    std::string to_expr() const;     // "x*y^2*z", or "1"

    std::uint64_t code() const { return code_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.len_ <=> b.len_; c != 0) return c;
        return a.code_ <=> b.code_;
    }
    // Lexicographic order ignoring length (a proper prefix sorts first).
    static bool lex_less(const Word& a, const Word& b) {
        return a.code_ != b.code_ ? a.code_ < b.code_ : a.len_ < b.len_;
    }

private:
    std::uint64_t code_ = 0;
    std::uint8_t len_ = 0;
};

Word operator*(const Word& a, const Word& b);

int weighted_degree(const Word& w, const WeightSystem& ws);

// Number of words of weighted degree exactly m.
std::uint64_t word_count(const WeightSystem& ws, int m);

// All words of weighted degree exactly m, lexicographically sorted.
std::vector<Word> words_of_degree(const WeightSystem& ws, int m);

// Noncommutative polynomial: finite map from words to nonzero rationals.
class NCPoly {
public:
    using TermMap = std::map<Word, Rational>;

    NCPoly() = default;
    NCPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    NCPoly(const Word& w, const Rational& coeff = 1);

    static NCPoly letter(Letter l) { return NCPoly(Word::letter(l)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Word& w) const;
    void add_term(const Word& w, const Rational& coeff);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rational& s);
    NCPoly& operator*=(const NCPoly& o);

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(NCPoly a) { return a *= Rational(-1); }
    friend NCPoly operator*(NCPoly a, const Rational& s) { return a *= s; }
    friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    NCPoly pow(unsigned k) const;

    // Largest weighted degree of a term; -1 for zero.
    int degree(const WeightSystem& ws) const;
    int low_degree(const WeightSystem& ws) const;
    bool is_homogeneous(const WeightSystem& ws) const;
    NCPoly homogeneous_part(const WeightSystem& ws, int m) const;

    // Parser-compatible text, terms in descending order.
    std::string to_string() const;

private:
    TermMap terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

// Conjugacy class of a word, stored as its lexicographically least rotation.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(const Word& w);

    const Word& representative() const { return rep_; }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

private:
    Word rep_;
};

// Element of F/[F,F].
class Potential {
public:
    using TermMap = std::map<CyclicWord, Rational>;

    Potential() = default;
    static Potential project(const NCPoly& f);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const CyclicWord& w, const Rational& coeff);
    Rational coefficient(const CyclicWord& w) const;

    Potential& operator+=(const Potential& o);
    friend Potential operator+(Potential a, const Potential& b) { return a += b; }
    friend Potential operator*(const Rational& s, const Potential& p);
    friend bool operator==(const Potential&, const Potential&) = default;

    int degree(const WeightSystem& ws) const;
    Potential homogeneous_part(const WeightSystem& ws, int m) const;

    // The representative polynomial (one word per class).
    NCPoly as_ncpoly() const;
    std::string to_string() const;

private:
    TermMap terms_;
};

// The j-th cyclic derivative: for each occurrence of j in a cyclic word, the
// word read from just after that occurrence around to just before it.
NCPoly cyclic_derivative(const Potential& phi, Letter j);
NCPoly cyclic_derivative(const CyclicWord& w, Letter j);

CommPoly abelianize(const NCPoly& f);
CommPoly abelianize(const Potential& phi);

// Parameters for the potential family xyz - t*yxz + c*(P(x) + Q(y) + R(z)).
// Polynomial coefficient lists are ascending: entry k multiplies the k-th power.
struct ParameterSet {
    Rational t = 1;
    Rational c = 0;
    std::vector<Rational> P;
    std::vector<Rational> Q;
    std::vector<Rational> R;
    std::optional<Rational> q;
    std::optional<Rational> tau;
    std::optional<Rational> nu;
};

struct LegExponents {
    int p, q, r;
};

// (d/a, d/b, d/c); throws std::invalid_argument unless all are integers.
LegExponents leg_exponents(const WeightSystem& ws);

// P = x^p/p + lower[0]*x^(p-1) + ... + lower[p-2]*x, and likewise for Q, R.
// Each lower list may be shorter than p-1; missing entries are zero.
ParameterSet make_PQR(const WeightSystem& ws, const Rational& t, const Rational& c,
                      std::span<const Rational> lower_p = {}, std::span<const Rational> lower_q = {},
                      std::span<const Rational> lower_r = {});

// Leading terms only: P = x^p/p, Q = y^q/q, R = z^r/r.
ParameterSet leading_params(const WeightSystem& ws, const Rational& t, const Rational& c);

// Generic parameters: t, c and every lower coefficient drawn from the sampler.
ParameterSet random_params(const WeightSystem& ws, RationalSampler& rng, bool leading_only = false);

NCPoly univariate(Letter l, std::span<const Rational> ascending);
std::vector<Rational> derivative_coeffs(std::span<const Rational> ascending);

Potential make_standard_potential(const WeightSystem& ws, const ParameterSet& params);

}  // namespace ncdp::ncalg

template <>
struct std::hash<ncdp::ncalg::Word> {
    std::size_t operator()(const ncdp::ncalg::Word& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.code() ^ (std::uint64_t(w.length()) * 0x9e3779b97f4a7c15ULL));
    }
};

#endif  // NCDP_NCALG_HPP
