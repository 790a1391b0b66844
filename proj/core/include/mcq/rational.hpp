#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mcq {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Rational q{Integer(num), Integer(den)};
    if (q.get_den() == 0) throw std::domain_error("rational: zero denominator");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace mcq
