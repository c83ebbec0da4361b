#include "ncdp/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncdp::series {

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UniPoly UniPoly::monomial(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

Rational UniPoly::evaluate(const Rational& u) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
    std::vector<Rational> rem = c_;
    int dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
    const Rational& lead = divisor.c_.back();
    for (int k = degree(); k >= dd; --k) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] / lead;
        quot[k - dd] = f;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * divisor.c_[i];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str() << (k ? "*" : "");
        if (k >= 1) os << 'u';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

UniPoly cyclotomic_binomial(int k) { return UniPoly::monomial(k) - UniPoly::monomial(0); }

Rational LaurentSeries::coefficient(int k) const {
    if (k > cap) throw std::out_of_range("LaurentSeries: degree above cap");
    int i = k - min_degree;
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[i];
}

std::vector<Rational> LaurentSeries::range(int from, int to) const {
    std::vector<Rational> out;
    for (int k = from; k <= to; ++k) out.push_back(coefficient(k));
    return out;
}

std::vector<Integer> product_series(std::span<const int> weights, int n) {
    std::vector<Integer> c(static_cast<std::size_t>(std::max(n, -1) + 1), Integer(0));
    if (n < 0) return c;
    c[0] = 1;
    // multiply by 1/(1-u^w) one factor at a time
    for (int w : weights)
        for (int k = w; k <= n; ++k) c[k] += c[k - w];
    return c;
}

std::vector<Integer> hypersurface_series(std::span<const int> weights, int d, int n) {
    auto p = product_series(weights, n);
    std::vector<Integer> out(p.size());
    for (int k = 0; k <= n; ++k) out[k] = p[k] - (k >= d ? p[k - d] : Integer(0));
    return out;
}

Rational milnor_formula(int a, int b, int c, int d) {
    Rational mu(Integer(d - a) * (d - b) * (d - c), Integer(a) * b * c);
    mu.canonicalize();
    return mu;
}

SaitoFunction saito(int a, int b, int c, int d) {
    if (a <= 0 || a > b || b > c || c >= d)
        throw std::invalid_argument("saito: need 0 < a <= b <= c < d");
    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1) throw std::invalid_argument("saito: need gcd(a,b,c,d) = 1");
    SaitoFunction s;
    s.numerator = cyclotomic_binomial(d - a) * cyclotomic_binomial(d - b) * cyclotomic_binomial(d - c);
    s.denominator = cyclotomic_binomial(a) * cyclotomic_binomial(b) * cyclotomic_binomial(c);
    auto [q, r] = s.numerator.divmod(s.denominator);
    s.is_polynomial = r.is_zero();
    if (s.is_polynomial) {
        s.mu = q.evaluate(1);
        if (*s.mu != milnor_formula(a, b, c, d))
            throw std::logic_error("saito: quotient at u=1 disagrees with the Milnor number formula");
        s.quotient = std::move(q);
    }
    return s;
}

namespace {

UniPoly chi(const ncalg::WeightSystem& ws) {
    auto s = saito(ws.a(), ws.b(), ws.c(), ws.d());
    if (!s.is_polynomial)
        throw std::domain_error("Hochschild series need a polynomial Saito quotient");
    return *s.quotient;
}

// Coefficients 0..n of chi(u) / (1 - u^d).
std::vector<Rational> chi_over_period(const UniPoly& chi, int d, int n) {
    std::vector<Rational> out(static_cast<std::size_t>(std::max(n, -1) + 1), Rational(0));
    for (int k = 0; k <= n; ++k) {
        out[k] = chi.coefficient(k);
        if (k >= d) out[k] += out[k - d];
    }
    return out;
}

LaurentSeries make_laurent(int min_degree, int cap, std::vector<Rational> coeffs) {
    LaurentSeries s;
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    s.min_degree = min_degree + static_cast<int>(lead);
    s.cap = cap;
    s.coeffs.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(lead), coeffs.end());
    if (s.coeffs.empty()) s.min_degree = cap + 1;
    return s;
}

}  // namespace

LaurentSeries hh_series(int k, const ncalg::WeightSystem& ws, int cap) {
    const int d = ws.d();
    UniPoly x = chi(ws);
    switch (k) {
        case 0:
        case 1: {
            std::vector<Rational> v(static_cast<std::size_t>(std::max(cap, -1) + 1), Rational(0));
            for (int m = 0; m <= cap; m += d) v[m] = 1;
            return make_laurent(0, cap, std::move(v));
        }
        case 2: {
            auto s = chi_over_period(x, d, cap + d);
            if (!s.empty()) s[0] -= 1;
            return make_laurent(-d, cap, std::move(s));
        }
        case 3:
            return make_laurent(-d, cap, chi_over_period(x, d, cap + d));
        default:
            throw std::invalid_argument("hh_series: k must be in 0..3");
    }
}

Integer hh2_nonpositive_dim(const ncalg::WeightSystem& ws) {
    auto s = hh_series(2, ws, 0);
    Rational total = 0;
    for (int k = s.min_degree; k <= 0; ++k) total += s.coefficient(k);
    if (total.get_den() != 1) throw std::logic_error("hh2_nonpositive_dim: non-integral dimension");
    return total.get_num();
}

std::vector<Integer> ph_Bphi_dims(const ncalg::WeightSystem& ws, int k_max,
                                  std::optional<std::span<const Integer>> graded_jacobi) {
    std::vector<Integer> jac;
    if (graded_jacobi) {
        jac.assign(graded_jacobi->begin(), graded_jacobi->end());
    } else {
        auto s = saito(ws.a(), ws.b(), ws.c(), ws.d());
        if (!s.is_polynomial) throw std::domain_error("ph_Bphi_dims: Jacobi ring is not finite for these weights");
        for (const auto& c : s.quotient->coeffs()) jac.push_back(c.get_num());
    }
    Integer mu = 0;
    for (const auto& j : jac) mu += j;
    int varpi = ws.varpi();
    Integer j_varpi = (varpi >= 0 && varpi < static_cast<int>(jac.size())) ? jac[varpi] : Integer(0);
    std::vector<Integer> out;
    for (int k = 0; k <= k_max; ++k) {
        if (k == 0)
            out.emplace_back(1);
        else if (k == 1)
            out.push_back(j_varpi);
        else if (k == 2)
            out.push_back(j_varpi + mu);
        else
            out.push_back(mu);
    }
    return out;
}

PoissonRanks ph_Aphi_ranks(const ncalg::WeightSystem& ws) {
    auto s = saito(ws.a(), ws.b(), ws.c(), ws.d());
    if (!s.is_polynomial) throw std::domain_error("ph_Aphi_ranks: Jacobi ring is not finite for these weights");
    Integer mu = s.mu->get_num();
    return PoissonRanks{{Integer(1), Integer(1), mu, mu}};
}

}  // namespace ncdp::series
