#pragma once

// Closed-form normalized point counts
//   D_n = -p^(-n/2) (#X(F_{p^n}) - p^n - 1) = Σ ζ_i^n
// for the four families, and the supersingular reduction rule.

#include <cstdint>
#include <map>
#include <string>

#include "aszeta/curves.hpp"
#include "aszeta/integer.hpp"

namespace aszeta {

/// u + v·√p. Every deficit of these curves is an integer (n even) or an
/// integer multiple of √p (n odd).
struct Deficit {
  Integer u = 0;
  Integer v = 0;

  static Deficit integer(Integer u) { return Deficit{std::move(u), 0}; }
  static Deficit sqrt_p(Integer v) { return Deficit{0, std::move(v)}; }

  bool is_zero() const { return u == 0 && v == 0; }
  Deficit operator*(int s) const { return Deficit{u * s, v * s}; }
  Deficit operator-() const { return Deficit{-u, -v}; }
  friend bool operator==(const Deficit& a, const Deficit& b) { return a.u == b.u && a.v == b.v; }
};

std::string to_string(const Deficit& d);

/// |u + v√p| <= bound, decided exactly; requires u = 0 or v = 0.
bool deficit_within(const Deficit& d, std::uint32_t p, const Integer& bound);

/// One evaluated row of a case table: the gcd that selects the case, a short
/// label naming the branch, and the deficit.
struct FormulaCase {
  std::uint64_t d;
  std::string label;
  Deficit deficit;
};

FormulaCase formula_case_B0(std::uint32_t p, std::uint64_t n);
FormulaCase formula_case_C0(std::uint32_t p, std::uint64_t n);
FormulaCase formula_case_Bk(std::uint32_t p, std::uint64_t k, std::uint64_t n);
FormulaCase formula_case_Ck(std::uint32_t p, std::uint64_t k, std::uint64_t n);
FormulaCase formula_case(const CurveSpec& spec, std::uint64_t n);

Deficit deficit_B0(std::uint32_t p, std::uint64_t n);
Deficit deficit_C0(std::uint32_t p, std::uint64_t n);
Deficit deficit_Bk(std::uint32_t p, std::uint64_t k, std::uint64_t n);
Deficit deficit_Ck(std::uint32_t p, std::uint64_t k, std::uint64_t n);
/// Dispatches on the family; C_{k,a} has the counts of C_k for every a.
Deficit deficit(const CurveSpec& spec, std::uint64_t n);

/// The l of the C_k tables: k if p | k, else k p.
std::uint64_t ck_level(std::uint32_t p, std::uint64_t k);

/// Deficit at level n from deficits at the divisors of s, where the Weil
/// numbers are √p times s-th roots of unity. With m = gcd(n, s), t = n/m:
/// D_n = D_m if m is even or p | t, else D_m · ((-1)^((t-1)/2) t / p).
Deficit reduce_supersingular(const std::map<std::uint64_t, Deficit>& base, std::uint64_t s, std::uint64_t n,
                             PrimeModulus p);

/// n even: p^n + 1 - p^(n/2) u.  n odd: p^n + 1 - p^((n+1)/2) v.
Integer count_from_deficit(const Deficit& d, std::uint32_t p, std::uint64_t n);

/// Inverse of count_from_deficit; throws InvariantViolation if the count is
/// not of the form p^n + 1 - p^(n/2)·(u + v√p) with the parity rule.
Deficit deficit_from_count(const Integer& count, std::uint32_t p, std::uint64_t n);

bool is_minimal(std::uint32_t p, std::uint64_t n, const Integer& g, const Deficit& d);
bool is_maximal(std::uint32_t p, std::uint64_t n, const Integer& g, const Deficit& d);

/// Closed-form point count #X(F_{p^n}).
inline Integer count_points_formula(const CurveSpec& spec, std::uint64_t n) {
  return count_from_deficit(deficit(spec, n), spec.p, n);
}

}  // namespace aszeta
