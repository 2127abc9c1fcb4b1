#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hybridtile {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a canonical rational.
inline Rational parse_rational(std::string_view s) {
    std::string str(s);
    auto slash = str.find('/');
    auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? str : str.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid(num) || !valid(den)) throw std::invalid_argument("bad rational: " + str);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + str);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(Rational r) {
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer pow2_int(unsigned long e) {
    Integer z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
    return z;
}

inline Rational pow2(long e) {
    Rational r(e >= 0 ? pow2_int(static_cast<unsigned long>(e)) : Integer(1),
               e >= 0 ? Integer(1) : pow2_int(static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace hybridtile
