#ifndef HARTOGS_RATIONAL_HPP
#define HARTOGS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hartogs {

/// Arbitrary-precision rational scalar used throughout the exact layer.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Binomial coefficient C(n, k) as an exact integer.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// q^e for integer e (e < 0 allowed when q != 0).
Rational rational_pow(const Rational& q, long e);

/// Parses "p/q", "p", or a finite decimal string ("0.75" -> 3/4) exactly.
Rational parse_rational(const std::string& text);

/// Canonical "num/den" text form (always carries the denominator).
std::string rational_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hartogs

#endif
