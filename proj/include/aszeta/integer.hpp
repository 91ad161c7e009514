#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace aszeta {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(std::uint64_t base, std::uint64_t exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

// Largest e with p^e | x; x must be nonzero.
inline unsigned p_valuation(const Integer& x, std::uint64_t p) {
  Integer y = abs(x);
  unsigned e = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    ++e;
  }
  return e;
}

}  // namespace aszeta
