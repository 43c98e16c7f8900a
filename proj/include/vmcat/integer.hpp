#pragma once

#include <gmpxx.h>

namespace vmcat {

// All coefficients in the engine are exact integers.
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// C(n, k) for n >= 0; zero when k < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Generalized C(n, k) allowing negative n.
inline Integer binomial_signed(long n, long k) {
  if (k < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace vmcat
