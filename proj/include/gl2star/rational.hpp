#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gl2star {

// Exact rational scalar. GMP keeps values canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. No floating point enters the exact pipeline.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("unparsable rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

// "p/q" with "/1" omitted; the canonical text form used everywhere.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline double to_double(const Rational& r) { return r.get_d(); }

} // namespace gl2star
