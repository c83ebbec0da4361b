#ifndef NCDP_CLASSIFY_HPP
#define NCDP_CLASSIFY_HPP

// Rational versus elliptic weighted plane curves of weights (a,b,c) and
// degree d <= a+b+c, by the case analysis on the leading power of z.

#include <optional>
#include <string>
#include <vector>

namespace ncdp::classify {

enum class Verdict { E6, E7, E8, Rational, NotApplicable };

const char* verdict_name(Verdict v);

struct ClassificationResult {
    Verdict verdict = Verdict::NotApplicable;
    int a = 0, b = 0, c = 0, d = 0;
    std::optional<int> p, q, r;  // d/a, d/b, d/c for elliptic verdicts
    std::string reason;

    bool elliptic() const { return verdict == Verdict::E6 || verdict == Verdict::E7 || verdict == Verdict::E8; }
    // (p-1, q-1, r-1): leg lengths of the extended Dynkin diagram.
    std::optional<std::vector<int>> legs() const;
};

// Throws std::invalid_argument unless 0 < a <= b <= c, gcd(a,b,c) = 1 and d > 0.
// d defaults to a+b+c; d > a+b+c gives NotApplicable.
ClassificationResult classify_weights(int a, int b, int c, std::optional<int> d = std::nullopt);

struct WeightTriple {
    int a, b, c;
    friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

// Every admissible triple with c <= bound whose curve of degree a+b+c is elliptic.
std::vector<WeightTriple> enumerate_elliptic(int bound);

}  // namespace ncdp::classify

#endif  // NCDP_CLASSIFY_HPP
