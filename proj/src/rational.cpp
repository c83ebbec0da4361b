#include "ncdp/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace ncdp {

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    Integer dz(std::string(den), 10);
    if (dz == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(n, 10), dz);
    r.canonicalize();
    return r;
}

}  // namespace ncdp
