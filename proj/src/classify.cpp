#include "ncdp/classify.hpp"

#include <numeric>
#include <stdexcept>

namespace ncdp::classify {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::E6: return "E6";
        case Verdict::E7: return "E7";
        case Verdict::E8: return "E8";
        case Verdict::Rational: return "Rational";
        case Verdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

std::optional<std::vector<int>> ClassificationResult::legs() const {
    if (!elliptic()) return std::nullopt;
    return std::vector<int>{*p - 1, *q - 1, *r - 1};
}

namespace {

ClassificationResult rational(ClassificationResult r, std::string reason) {
    r.verdict = Verdict::Rational;
    r.reason = std::move(reason);
    return r;
}

ClassificationResult elliptic(ClassificationResult r, Verdict v, std::string reason) {
    if (r.d != r.a + r.b + r.c || r.d % r.a || r.d % r.b || r.d % r.c)
        return rational(std::move(r), reason + ", but d != a+b+c");
    r.verdict = v;
    r.p = r.d / r.a;
    r.q = r.d / r.b;
    r.r = r.d / r.c;
    r.reason = std::move(reason);
    return r;
}

}  // namespace

ClassificationResult classify_weights(int a, int b, int c, std::optional<int> d_opt) {
    if (!(0 < a && a <= b && b <= c)) throw std::invalid_argument("classify_weights: need 0 < a <= b <= c");
    if (std::gcd(std::gcd(a, b), c) != 1) throw std::invalid_argument("classify_weights: gcd(a,b,c) != 1");
    int d = d_opt.value_or(a + b + c);
    if (d <= 0) throw std::invalid_argument("classify_weights: degree must be positive");

    ClassificationResult r;
    r.a = a;
    r.b = b;
    r.c = c;
    r.d = d;
    if (d > a + b + c) {
        r.reason = "degree exceeds a+b+c";
        return r;
    }

    if (a == c) {
        if (d == 3) return elliptic(r, Verdict::E6, "all degrees equal: plane cubic");
        return rational(r, "all degrees equal: plane curve of degree below 3");
    }
    if (2 * c > d) return rational(r, "unequal degrees: leading power of z is 1");
    if (b == c) return rational(r, "Case 1: a<b=c, a linear change in y,z kills z^2");

    // Case 2: z^2 = g(x, y) with g of degree 2c.
    if (a == b) {
        if (2 * c == 3 * a) return rational(r, "Case 2a: a=b, deg g = 3, weights (2,2,3)");
        if (2 * c == 4 * a) return elliptic(r, Verdict::E7, "Case 2a: a=b, deg g = 4");
        return rational(r, "Case 2a: a=b, no binary form of degree 2c");
    }
    if (2 * c != 3 * b) return rational(r, "Case 2b: a<b, g has no y^3 term");
    if (b == 2 * a) return elliptic(r, Verdict::E8, "Case 2b: a<b, b=2a");
    if (a * 3 == 2 * b) return rational(r, "Case 2b: b<2a, z^2 = y^3 + x^3 y, weights (4,6,9)");
    if ((2 * c) % a == 0) {
        int p = 2 * c / a;
        if (p == 5) return rational(r, "Case 2b: b<2a, z^2 = y^3 + x^5, weights (6,2p,3p)");
        if (p == 4) return rational(r, "Case 2b: b<2a, z^2 = y^3 + x^4, weights (3,4,6)");
    }
    return rational(r, "Case 2b: b<2a, g = y^3");
}

std::vector<WeightTriple> enumerate_elliptic(int bound) {
    if (bound < 3) throw std::invalid_argument("enumerate_elliptic: bound must be at least 3");
    std::vector<WeightTriple> out;
    for (int c = 1; c <= bound; ++c)
        for (int b = 1; b <= c; ++b)
            for (int a = 1; a <= b; ++a) {
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                if (classify_weights(a, b, c).elliptic()) out.push_back({a, b, c});
            }
    return out;
}

}  // namespace ncdp::classify
