#ifndef QMF_RATIONAL_HPP
#define QMF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qmf {

// Arbitrary precision rational in canonical form (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// num/den in canonical form; mpq_class(num, den) alone does not reduce.
inline Rational fraction(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return Rational(0);
  }
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

}  // namespace qmf

#endif
