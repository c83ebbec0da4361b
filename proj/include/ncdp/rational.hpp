#ifndef NCDP_RATIONAL_HPP
#define NCDP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace ncdp {

// Exact rationals with arbitrary-precision numerator and denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// Random rational p/q with p in [-num_bound, num_bound], q in [1, den_bound].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long num_bound = 1000000, long den_bound = 1000)
        : engine_(seed), num_(-num_bound, num_bound), den_(1, den_bound) {}

    Rational operator()() {
        long p = num_(engine_);
        long q = den_(engine_);
        return make_rational(p, q);
    }

    // Same distribution, redrawn until nonzero.
    Rational nonzero() {
        for (;;) {
            Rational r = (*this)();
            if (r != 0) return r;
        }
    }

private:
    std::mt19937_64 engine_;
    std::uniform_int_distribution<long> num_;
    std::uniform_int_distribution<long> den_;
};

}  // namespace ncdp

#endif  // NCDP_RATIONAL_HPP
