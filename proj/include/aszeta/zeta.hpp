#pragma once

// L-polynomials L(T) = Σ c_i T^i = Π (1 - η_i T) of curves over F_q, q = p^r,
// built exactly from point counts through the Newton recurrence.

#include <cstdint>
#include <string>
#include <vector>

#include "aszeta/curves.hpp"
#include "aszeta/integer.hpp"

namespace aszeta {

struct LPolynomial {
  PrimeModulus p;
  unsigned r = 1;  // base field F_{p^r}
  unsigned g = 0;
  std::vector<Integer> coeffs;  // c_0 .. c_{2g}

  Integer q() const { return ipow(p.value(), r); }
  friend bool operator==(const LPolynomial& a, const LPolynomial& b) {
    return a.p == b.p && a.r == b.r && a.g == b.g && a.coeffs == b.coeffs;
  }
};

/// counts[m-1] = #X(F_{q^m}) for m = 1..2g. Throws InvariantViolation naming
/// the first index where m c_m is not divisible by m.
LPolynomial lpoly_from_counts(const std::vector<Integer>& counts, PrimeModulus p, unsigned r, unsigned g);

enum class ViolationKind { LeadingCoefficients, FunctionalEquation, SupersingularValuation, Degree };

struct Violation {
  ViolationKind kind;
  unsigned index;
  std::string message;
};

/// c_0 = 1, c_{2g} = q^g, c_{2g-i} = q^(g-i) c_i, ord_p(c_i) >= i r / 2.
std::vector<Violation> validate(const LPolynomial& L);

/// Power sums s_n = Σ η_i^n for n = 1..count (Newton identities run backwards).
std::vector<Integer> power_sums(const LPolynomial& L, unsigned count);

/// #X(F_{q^n}) = q^n + 1 - s_n.
Integer counts_from_lpoly(const LPolynomial& L, unsigned n);

/// L-polynomial over F_{q^m}: reciprocal roots η_i^m.
LPolynomial base_change(const LPolynomial& L, unsigned m);

/// L-polynomial of a family member over F_{p^r} from closed-form counts.
LPolynomial lpoly_of(const CurveSpec& spec, unsigned r = 1);

/// Ascending powers with explicit signs: "1 + 3*T^2 - 162*T^8 + ...".
std::string render(const LPolynomial& L);
/// Inverse of render for the coefficient list; genus is deg/2.
LPolynomial parse_lpoly(const std::string& text, PrimeModulus p, unsigned r);

/// Reflection c_i ↦ (-1)^i c_i, i.e. L(-T).
LPolynomial negate_variable(const LPolynomial& L);

/// Coefficient-wise comparison against a reference polynomial, split by parity.
struct LPolyComparison {
  bool exact = false;
  bool even_match = false;          // all even-degree coefficients agree
  bool odd_match = false;           // all odd-degree coefficients agree
  bool odd_match_negated = false;   // odd-degree coefficients agree up to sign, i.e. reference = L(-T) there
  std::vector<unsigned> differing;  // degrees where the coefficients differ
  std::string report() const;
};
LPolyComparison compare_lpoly(const LPolynomial& computed, const LPolynomial& reference);

}  // namespace aszeta
