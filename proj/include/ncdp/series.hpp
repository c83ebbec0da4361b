#ifndef NCDP_SERIES_HPP
#define NCDP_SERIES_HPP

// Closed-form generating functions: weighted product series, the Saito quotient
// and its polynomiality test, Hochschild series and Poisson dimension reports.

#include "ncdp/ncalg.hpp"
#include "ncdp/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncdp::series {

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending);
    static UniPoly monomial(int k, const Rational& c = 1);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coefficient(int k) const;
    Rational evaluate(const Rational& u) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    // Euclidean division; throws std::domain_error for a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// u^k - 1
UniPoly cyclotomic_binomial(int k);

// Truncated Laurent series sum_{k >= min_degree} coeff_k u^k, known up to an explicit cap.
struct LaurentSeries {
    int min_degree = 0;
    int cap = 0;
    std::vector<Rational> coeffs;  // coeffs[i] multiplies u^(min_degree + i)

    Rational coefficient(int k) const;  // zero below min_degree; throws above cap
    std::vector<Rational> range(int from, int to) const;
};

// Coefficients 0..n of 1 / prod (1 - u^w) over the given weights.
std::vector<Integer> product_series(std::span<const int> weights, int n);

// Coefficients 0..n of (1 - u^d) / prod (1 - u^w).
std::vector<Integer> hypersurface_series(std::span<const int> weights, int d, int n);

// (d-a)(d-b)(d-c)/(abc)
Rational milnor_formula(int a, int b, int c, int d);

struct SaitoFunction {
    UniPoly numerator;    // (u^(d-a)-1)(u^(d-b)-1)(u^(d-c)-1)
    UniPoly denominator;  // (u^a-1)(u^b-1)(u^c-1)
    bool is_polynomial = false;
    std::optional<UniPoly> quotient;
    std::optional<Rational> mu;  // quotient(1), when the quotient exists
};

// Requires 0 < a <= b <= c < d and gcd(a,b,c,d) = 1.
SaitoFunction saito(int a, int b, int c, int d);

// Hilbert series of HH^k, k = 0..3, up to degree cap. Requires a polynomial
// Saito quotient; throws std::domain_error otherwise.
LaurentSeries hh_series(int k, const ncalg::WeightSystem& ws, int cap);

// Sum of the HH^2 coefficients in degrees <= 0.
Integer hh2_nonpositive_dim(const ncalg::WeightSystem& ws);

// [1, j, j + mu, mu, mu, ...] (entries 0..k_max), with j = dim J^(varpi).
// graded_jacobi, when supplied, replaces the Saito coefficients as the source of j and mu.
std::vector<Integer> ph_Bphi_dims(const ncalg::WeightSystem& ws, int k_max,
                                  std::optional<std::span<const Integer>> graded_jacobi = std::nullopt);

struct PoissonRanks {
    std::vector<Integer> ranks;  // degrees 0..3 over C[phi]; zero from degree 4 on
    Integer rank(int k) const { return k >= 0 && k < static_cast<int>(ranks.size()) ? ranks[k] : Integer(0); }
};

PoissonRanks ph_Aphi_ranks(const ncalg::WeightSystem& ws);

}  // namespace ncdp::series

#endif  // NCDP_SERIES_HPP
