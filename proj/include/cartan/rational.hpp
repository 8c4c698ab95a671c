#ifndef CARTAN_RATIONAL_HPP
#define CARTAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "cartan/errors.hpp"

namespace cartan {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// Exact quotient a/b; throws consistency_error when b does not divide a.
inline Integer exact_div(const Integer& a, const Integer& b, const char* context) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw consistency_error(std::string(context) + ": quotient " + a.get_str() + "/" +
                            b.get_str() + " is not an integer");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace cartan

#endif
