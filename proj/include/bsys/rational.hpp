#ifndef BSYS_RATIONAL_HPP
#define BSYS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "bsys/errors.hpp"

namespace bsys {

// Exact arbitrary-precision rationals. mpq_class arithmetic keeps values in
// canonical form (reduced fraction, positive denominator) as long as inputs
// are canonical, so construction from raw numerator/denominator pairs must go
// through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace bsys

#endif
