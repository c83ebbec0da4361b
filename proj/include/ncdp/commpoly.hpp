#ifndef NCDP_COMMPOLY_HPP
#define NCDP_COMMPOLY_HPP

#include "ncdp/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncdp {

// Sparse commutative polynomial in N variables over Q. Terms are keyed by
// exponent vectors; zero coefficients are never stored.
template <std::size_t N>
class MPoly {
public:
    using Exponent = std::array<int, N>;
    using TermMap = std::map<Exponent, Rational>;

    MPoly() = default;
    MPoly(const Rational& constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) terms_[Exponent{}] = constant;
    }

    static MPoly monomial(const Exponent& e, const Rational& coeff = 1) {
        MPoly p;
        p.add_term(e, coeff);
        return p;
    }

    static MPoly variable(std::size_t i) {
        if (i >= N) throw std::out_of_range("MPoly::variable: index out of range");
        Exponent e{};
        e[i] = 1;
        return monomial(e);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponent& e, const Rational& coeff) {
        if (coeff == 0) return;
        for (int k : e)
            if (k < 0) throw std::invalid_argument("MPoly: negative exponent");
        auto [it, inserted] = terms_.try_emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
    friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
    friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(unsigned k) const {
        MPoly out(Rational(1));
        for (unsigned i = 0; i < k; ++i) out *= *this;
        return out;
    }

    MPoly derivative(std::size_t i) const {
        MPoly out;
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponent f = e;
            f[i] -= 1;
            out.add_term(f, c * e[i]);
        }
        return out;
    }

    // Largest weighted degree; -1 for the zero polynomial.
    int degree(std::span<const int> weights) const {
        int best = -1;
        for (const auto& [e, c] : terms_) best = std::max(best, weighted(e, weights));
        return best;
    }

    int total_degree() const {
        std::array<int, N> ones;
        ones.fill(1);
        return degree(ones);
    }

    bool is_homogeneous(std::span<const int> weights) const {
        if (terms_.empty()) return true;
        int d = weighted(terms_.begin()->first, weights);
        for (const auto& [e, c] : terms_)
            if (weighted(e, weights) != d) return false;
        return true;
    }

    MPoly homogeneous_part(std::span<const int> weights, int deg) const {
        MPoly out;
        for (const auto& [e, c] : terms_)
            if (weighted(e, weights) == deg) out.terms_.emplace(e, c);
        return out;
    }

    Rational evaluate(std::span<const Rational> point) const {
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < N; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            sum += t;
        }
        return sum;
    }

    // Prints with descending term order, e.g. "x^2*y - 1/3*z".
    std::string to_string(std::span<const std::string> names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational mag = abs(c);
            bool neg = c < 0;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            bool constant = true;
            for (int k : e)
                if (k) constant = false;
            if (constant) {
                os << mag.get_str();
                continue;
            }
            bool need_star = false;
            if (mag != 1) {
                os << mag.get_str();
                need_star = true;
            }
            for (std::size_t i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << '*';
                os << names[i];
                if (e[i] > 1) os << '^' << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    static int weighted(const Exponent& e, std::span<const int> w) {
        int d = 0;
        for (std::size_t i = 0; i < N; ++i) d += e[i] * w[i];
        return d;
    }

    TermMap terms_;
};

// Polynomials in x, y, z.
using CommPoly = MPoly<3>;

inline const std::array<std::string, 3>& xyz_names() {
    static const std::array<std::string, 3> names{"x", "y", "z"};
    return names;
}

inline std::string to_string(const CommPoly& p) { return p.to_string(xyz_names()); }

inline CommPoly var_x() { return CommPoly::variable(0); }
inline CommPoly var_y() { return CommPoly::variable(1); }
inline CommPoly var_z() { return CommPoly::variable(2); }

}  // namespace ncdp

#endif  // NCDP_COMMPOLY_HPP
