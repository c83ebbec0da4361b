#include "ncdp/ncalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncdp::ncalg {

char letter_char(Letter l) { return "xyz"[static_cast<int>(l)]; }

Letter letter_from_char(char ch) {
    switch (ch) {
        case 'x': return Letter::X;
        case 'y': return Letter::Y;
        case 'z': return Letter::Z;
        default: throw std::invalid_argument(std::string("not a letter of {x,y,z}: '") + ch + "'");
    }
}

WeightSystem::WeightSystem(int a, int b, int c, std::optional<int> d) : w_{a, b, c}, d_(d.value_or(a + b + c)) {
    if (a <= 0 || a > b || b > c)
        throw std::invalid_argument("weights must satisfy 0 < a <= b <= c");
    if (std::gcd(std::gcd(a, b), c) != 1) throw std::invalid_argument("weights must have gcd 1");
    if (d_ <= 0) throw std::invalid_argument("degree must be positive");
}

Word::Word(std::span<const Letter> letters) {
    if (letters.size() > kMaxLength) throw std::length_error("word longer than 32 letters");
    for (std::size_t i = 0; i < letters.size(); ++i)
        code_ |= std::uint64_t(static_cast<int>(letters[i]) + 1) << (62 - 2 * i);
    len_ = static_cast<std::uint8_t>(letters.size());
}

Word Word::parse(std::string_view text) {
    if (text == "1") return Word();
    std::vector<Letter> ls;
    ls.reserve(text.size());
    for (char ch : text) ls.push_back(letter_from_char(ch));
    return Word(ls);
}

Word Word::letter(Letter l) {
    std::array<Letter, 1> one{l};
    return Word(one);
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> out(len_);
    for (std::size_t i = 0; i < len_; ++i) out[i] = (*this)[i];
    return out;
}

Word Word::concat(const Word& other) const {
    if (len_ + other.len_ > kMaxLength) throw std::length_error("word longer than 32 letters");
    Word w;
    w.code_ = code_ | (len_ == 0 ? other.code_ : other.code_ >> (2 * len_));
    w.len_ = static_cast<std::uint8_t>(len_ + other.len_);
    return w;
}

Word Word::subword(std::size_t pos, std::size_t count) const {
    if (pos + count > len_) throw std::out_of_range("Word::subword");
    Word w;
    if (count == 0) return w;
    std::uint64_t shifted = pos == 0 ? code_ : code_ << (2 * pos);
    std::uint64_t mask = count == kMaxLength ? ~0ULL : ~(~0ULL >> (2 * count));
    w.code_ = shifted & mask;
    w.len_ = static_cast<std::uint8_t>(count);
    return w;
}

Word Word::rotate(std::size_t k) const {
    if (len_ == 0) return *this;
    k %= len_;
    if (k == 0) return *this;
    return subword(k, len_ - k).concat(subword(0, k));
}

std::array<int, 3> Word::letter_counts() const {
    std::array<int, 3> counts{0, 0, 0};
    for (std::size_t i = 0; i < len_; ++i) ++counts[static_cast<int>((*this)[i])];
    return counts;
}

std::string Word::to_string() const {
    if (len_ == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < len_; ++i) s += letter_char((*this)[i]);
    return s;
}

std::string Word::to_expr() const {
    if (len_ == 0) return "1";
    std::string s;
    std::size_t i = 0;
    while (i < len_) {
        Letter l = (*this)[i];
        std::size_t run = 1;
        while (i + run < len_ && (*this)[i + run] == l) ++run;
        if (!s.empty()) s += '*';
        s += letter_char(l);
        if (run > 1) s += '^' + std::to_string(run);
        i += run;
    }
    return s;
}

Word operator*(const Word& a, const Word& b) { return a.concat(b); }

int weighted_degree(const Word& w, const WeightSystem& ws) {
    int d = 0;
    for (std::size_t i = 0; i < w.length(); ++i) d += ws.weight(w[i]);
    return d;
}

std::uint64_t word_count(const WeightSystem& ws, int m) {
    if (m < 0) return 0;
    std::vector<std::uint64_t> c(static_cast<std::size_t>(m) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= m; ++k)
        for (Letter l : kLetters)
            if (ws.weight(l) <= k) c[k] += c[k - ws.weight(l)];
    return c[m];
}

std::vector<Word> words_of_degree(const WeightSystem& ws, int m) {
    std::vector<Word> out;
    if (m < 0) return out;
    std::vector<Letter> buf;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.emplace_back(buf);
            return;
        }
        for (Letter l : kLetters) {
            if (ws.weight(l) > remaining) continue;
            buf.push_back(l);
            rec(remaining - ws.weight(l));
            buf.pop_back();
        }
    };
    rec(m);
    std::sort(out.begin(), out.end(), Word::lex_less);
    return out;
}

// NCPoly

NCPoly::NCPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace(Word(), constant);
}

NCPoly::NCPoly(const Word& w, const Rational& coeff) {
    if (coeff != 0) terms_.emplace(w, coeff);
}

Rational NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    return out;
}

NCPoly& NCPoly::operator*=(const NCPoly& o) { return *this = *this * o; }

NCPoly NCPoly::pow(unsigned k) const {
    NCPoly out(Rational(1));
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

int NCPoly::degree(const WeightSystem& ws) const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, weighted_degree(w, ws));
    return d;
}

int NCPoly::low_degree(const WeightSystem& ws) const {
    if (terms_.empty()) return -1;
    int d = weighted_degree(terms_.begin()->first, ws);
    for (const auto& [w, c] : terms_) d = std::min(d, weighted_degree(w, ws));
    return d;
}

bool NCPoly::is_homogeneous(const WeightSystem& ws) const { return degree(ws) == low_degree(ws); }

NCPoly NCPoly::homogeneous_part(const WeightSystem& ws, int m) const {
    NCPoly out;
    for (const auto& [w, c] : terms_)
        if (weighted_degree(w, ws) == m) out.terms_.emplace(w, c);
    return out;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (w.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << w.to_expr();
        } else {
            os << mag.get_str() << '*' << w.to_expr();
        }
    }
    return os.str();
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

// Cyclic words

CyclicWord::CyclicWord(const Word& w) : rep_(w) {
    for (std::size_t k = 1; k < w.length(); ++k) {
        Word r = w.rotate(k);
        if (r.code() < rep_.code()) rep_ = r;
    }
}

Potential Potential::project(const NCPoly& f) {
    Potential p;
    for (const auto& [w, c] : f.terms()) p.add_term(CyclicWord(w), c);
    return p;
}

void Potential::add_term(const CyclicWord& w, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Potential::coefficient(const CyclicWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

Potential& Potential::operator+=(const Potential& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Potential operator*(const Rational& s, const Potential& p) {
    Potential out;
    for (const auto& [w, c] : p.terms_) out.add_term(w, s * c);
    return out;
}

int Potential::degree(const WeightSystem& ws) const { return as_ncpoly().degree(ws); }

Potential Potential::homogeneous_part(const WeightSystem& ws, int m) const {
    Potential out;
    for (const auto& [w, c] : terms_)
        if (weighted_degree(w.representative(), ws) == m) out.add_term(w, c);
    return out;
}

NCPoly Potential::as_ncpoly() const {
    NCPoly f;
    for (const auto& [w, c] : terms_) f.add_term(w.representative(), c);
    return f;
}

std::string Potential::to_string() const { return as_ncpoly().to_string(); }

NCPoly cyclic_derivative(const CyclicWord& cw, Letter j) {
    const Word& w = cw.representative();
    NCPoly out;
    for (std::size_t s = 0; s < w.length(); ++s) {
        if (w[s] != j) continue;
        // rotate so that the occurrence comes first, then drop it
        Word r = w.rotate(s);
        out.add_term(r.subword(1, r.length() - 1), 1);
    }
    return out;
}

NCPoly cyclic_derivative(const Potential& phi, Letter j) {
    NCPoly out;
    for (const auto& [w, c] : phi.terms()) out += c * cyclic_derivative(w, j);
    return out;
}

CommPoly abelianize(const NCPoly& f) {
    CommPoly out;
    for (const auto& [w, c] : f.terms()) out.add_term(w.letter_counts(), c);
    return out;
}

CommPoly abelianize(const Potential& phi) { return abelianize(phi.as_ncpoly()); }

// Families

LegExponents leg_exponents(const WeightSystem& ws) {
    int d = ws.d();
    if (d % ws.a() || d % ws.b() || d % ws.c())
        throw std::invalid_argument("non-integral leg exponents d/a, d/b, d/c for weights (" +
                                    std::to_string(ws.a()) + "," + std::to_string(ws.b()) + "," +
                                    std::to_string(ws.c()) + ") and d=" + std::to_string(d));
    return {d / ws.a(), d / ws.b(), d / ws.c()};
}

namespace {

std::vector<Rational> leg_poly(int n, std::span<const Rational> lower) {
    if (lower.size() > static_cast<std::size_t>(std::max(n - 1, 0)))
        throw std::invalid_argument("too many lower coefficients for a degree-" + std::to_string(n) + " polynomial");
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    coeffs[n] = Rational(1, n);
    for (std::size_t i = 0; i < lower.size(); ++i) coeffs[n - 1 - i] = lower[i];
    return coeffs;
}

void check_leg(const std::vector<Rational>& coeffs, int expected, const char* name) {
    int deg = -1;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) deg = static_cast<int>(k);
    if (deg != expected)
        throw std::invalid_argument(std::string("polynomial ") + name + " has degree " + std::to_string(deg) +
                                    ", expected " + std::to_string(expected));
}

}  // namespace

ParameterSet make_PQR(const WeightSystem& ws, const Rational& t, const Rational& c, std::span<const Rational> lower_p,
                      std::span<const Rational> lower_q, std::span<const Rational> lower_r) {
    auto legs = leg_exponents(ws);
    ParameterSet ps;
    ps.t = t;
    ps.c = c;
    ps.P = leg_poly(legs.p, lower_p);
    ps.Q = leg_poly(legs.q, lower_q);
    ps.R = leg_poly(legs.r, lower_r);
    return ps;
}

ParameterSet leading_params(const WeightSystem& ws, const Rational& t, const Rational& c) {
    return make_PQR(ws, t, c);
}

ParameterSet random_params(const WeightSystem& ws, RationalSampler& rng, bool leading_only) {
    auto legs = leg_exponents(ws);
    Rational t = rng.nonzero();
    Rational c = rng.nonzero();
    if (leading_only) return make_PQR(ws, t, c);
    auto draw = [&](int n) {
        std::vector<Rational> v;
        for (int i = 0; i + 1 < n; ++i) v.push_back(rng());
        return v;
    };
    auto lp = draw(legs.p);
    auto lq = draw(legs.q);
    auto lr = draw(legs.r);
    return make_PQR(ws, t, c, lp, lq, lr);
}

NCPoly univariate(Letter l, std::span<const Rational> ascending) {
    NCPoly out;
    NCPoly power(Rational(1));
    NCPoly var = NCPoly::letter(l);
    for (const auto& coeff : ascending) {
        out += coeff * power;
        power *= var;
    }
    return out;
}

std::vector<Rational> derivative_coeffs(std::span<const Rational> ascending) {
    std::vector<Rational> out;
    for (std::size_t k = 1; k < ascending.size(); ++k) out.push_back(ascending[k] * static_cast<long>(k));
    return out;
}

Potential make_standard_potential(const WeightSystem& ws, const ParameterSet& params) {
    auto legs = leg_exponents(ws);
    for (const auto* poly : {&params.P, &params.Q, &params.R})
        if (!poly->empty() && (*poly)[0] != 0)
            throw std::invalid_argument("P, Q, R must have zero constant term");
    if (params.c != 0) {
        check_leg(params.P, legs.p, "P");
        check_leg(params.Q, legs.q, "Q");
        check_leg(params.R, legs.r, "R");
    }
    NCPoly x = NCPoly::letter(Letter::X), y = NCPoly::letter(Letter::Y), z = NCPoly::letter(Letter::Z);
    NCPoly f = x * y * z - params.t * (y * x * z);
    f += params.c * (univariate(Letter::X, params.P) + univariate(Letter::Y, params.Q) +
                     univariate(Letter::Z, params.R));
    return Potential::project(f);
}

}  // namespace ncdp::ncalg
