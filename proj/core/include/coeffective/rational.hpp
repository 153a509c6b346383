#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace coeffective {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator, zero as 0/1), which is what makes every rank decision in this
// library trustworthy.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p" with optional sign. Throws on malformed input.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// "p/q" with the "/q" omitted when the denominator is 1.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace coeffective
