#pragma once

// The four Artin–Schreier families y^p - y = f(x) and exhaustive point counting.

#include <cstdint>
#include <string>

#include "aszeta/finite_field.hpp"
#include "aszeta/integer.hpp"

namespace aszeta {

enum class Family {
  B0,  // y^p - y = x^2
  C0,  // y^p - y = x^2 + x
  B,   // y^p - y = x^(p^k + 1)
  C,   // y^p - y = x^(p^k + 1) + a x
};

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct CurveSpec {
  Family family;
  PrimeModulus p;
  unsigned k = 0;  // B and C only
  Residue a = 1;   // C only

  static CurveSpec b0(std::uint64_t p);
  static CurveSpec c0(std::uint64_t p);
  static CurveSpec bk(std::uint64_t p, unsigned k);
  static CurveSpec ck(std::uint64_t p, unsigned k, Residue a = 1);

  /// Throws BadInput on k = 0 for B/C or a ∉ {1..p-1} for C.
  void check() const;
  /// Short display form, e.g. "C_2^(3)" or "C_{2,a=2}^(5)".
  std::string label() const;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// (p-1)/2 for B0/C0, p^k (p-1)/2 for B/C.
Integer genus(const CurveSpec& spec);

FieldElement rhs_eval(const CurveSpec& spec, const FieldElement& x);

struct PointCount {
  CurveSpec spec;
  unsigned n;
  Integer count;
};

/// count ≡ 1 (mod p) and the Hasse–Weil bound |count - p^n - 1| <= 2g p^(n/2).
bool satisfies_point_count_invariants(const PointCount& pc);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // max field elements enumerated
  int jobs = 0;                           // 0 = OpenMP default
};

/// Number of x in [first, last) (odometer order) with Tr(f(x)) = 0.
/// Serial reference kernel; the parallel counter must agree with it.
std::uint64_t count_trace_zeros_serial(const CurveSpec& spec, const FieldTower& tower, std::uint64_t first,
                                       std::uint64_t last);

/// Same count, OpenMP-partitioned into contiguous blocks reduced by addition.
std::uint64_t count_trace_zeros_parallel(const CurveSpec& spec, const FieldTower& tower, std::uint64_t first,
                                         std::uint64_t last, int jobs = 0);

/// p N + 1 with N = #{x ∈ F_{p^n} : Tr(f(x)) = 0}. Throws BudgetExceeded if p^n > budget.
PointCount count_points_bruteforce(const CurveSpec& spec, unsigned n, const EnumerationOptions& opts = {});

/// Brute-force count over a caller-supplied model of F_{p^n}.
PointCount count_points_bruteforce(const CurveSpec& spec, const FieldTower& tower, const EnumerationOptions& opts = {});

/// True iff #C_{k,a}(F_{p^n}) is the same for every a ∈ F_p^×.
bool verify_a_invariance(std::uint64_t p, unsigned k, unsigned n, std::uint64_t budget = kDefaultBudget);

}  // namespace aszeta
