#ifndef VTXCALC_RATIONAL_HPP
#define VTXCALC_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace vtx {

// Exact rationals. mpq_class keeps the canonical form we require
// (gcd = 1, positive denominator) as long as values are built through
// arithmetic or rat_parse.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Generalized binomial coefficient n(n-1)...(n-k+1) / k! for integer n
// and natural k. Defined for negative n as the usual falling-factorial
// extension.
Rational gen_binom(long n, long k);

// "p/q" or "p"; q > 0 enforced by canonicalization.
Rational rat_parse(const std::string& text);
std::string rat_str(const Rational& r);

} // namespace vtx

#endif
