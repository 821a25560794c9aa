#pragma once

// Exact arithmetic used throughout. Every decision procedure in the
// library compares rationals; floating point never enters.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace arrmorse {

using Integer = mpz_class;
using Rational = mpq_class;
using Vec = std::vector<Rational>;

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// Accepts "p/q", plain integers and decimal strings ("-3", "0.25", "1e2"
// is not supported on purpose; exponents are not needed for input files).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num(s.substr(0, slash), 10);
        Integer den(s.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational q(Integer(s, 10), Integer(1));
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || frac_len == 0) throw std::invalid_argument("bad decimal '" + s + "'");
    Integer num(digits, 10);
    Integer den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

} // namespace arrmorse
