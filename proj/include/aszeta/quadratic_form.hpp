#pragma once

// Zero counts of trace forms Q(x) = Tr(Σ c_ij x^(p^i + p^j)) on F_{p^n} from the
// rank, radical and discriminant of the polarized bilinear form. Runs in
// time polynomial in n, so it reaches levels far beyond enumeration.

#include <cstdint>
#include <optional>
#include <vector>

#include "aszeta/curves.hpp"
#include "aszeta/finite_field.hpp"
#include "aszeta/integer.hpp"

namespace aszeta {

struct QuadraticTerm {
  unsigned i, j;  // c · x^(p^i + p^j)
  Residue c;
};

struct LinearTerm {
  unsigned i;  // c · x^(p^i)
  Residue c;
};

struct TraceFormSpec {
  PrimeModulus p;
  unsigned n;
  std::vector<QuadraticTerm> quadratic;
  std::vector<LinearTerm> linear;
  Residue target = 0;  // count x with Q(x) + Tr(linear) = target

  /// Tr(x^(p^k + 1)) on F_{p^n}; k = 0 gives Tr(x^2).
  static TraceFormSpec power_form(PrimeModulus p, unsigned n, unsigned k, Residue target = 0);
};

/// Value of Q(x) + Tr(linear part) at x.
Residue evaluate(const TraceFormSpec& spec, const FieldElement& x);

struct GramData {
  PrimeModulus p;
  unsigned n;
  std::vector<Residue> matrix;  // n×n row-major, B(b_u, b_v) on the basis 1, x, ..., x^(n-1)
  unsigned rank;
  unsigned radical_dim;
  std::optional<int> sign;  // legendre((-1)^(rank/2) Δ, p); set iff rank is even
  Residue discriminant;     // Δ: product of the nonzero pivots of A = B/2

  Residue at(unsigned u, unsigned v) const { return matrix[u * n + v]; }
};

/// Invariants of a symmetric matrix over F_p: (rank, Δ) of A = B/2 restricted
/// to a complement of the radical, by congruence diagonalization.
struct SymmetricInvariants {
  unsigned rank;
  Residue discriminant;
};
SymmetricInvariants symmetric_invariants(std::vector<Residue> a, unsigned n, PrimeModulus p);

GramData gram(const TraceFormSpec& spec);
GramData gram(const TraceFormSpec& spec, const FieldTower& tower);

/// #{x : Q(x) = 0}; requires target = 0 and no linear part.
Integer count_zeros(const TraceFormSpec& spec);
Integer count_zeros(const GramData& g);

/// #{x : Q(x) = b} for b ≠ 0; requires no linear part.
Integer count_value(const TraceFormSpec& spec);
Integer count_value(const GramData& g, Residue b);

/// Completing the square for C_{k,a} (and C0): #C(F_{p^n}) = p N_b + 1 where N_b
/// counts Tr(x^(p^k+1)) = b with b = n a^2 / 4 mod p.
TraceFormSpec affine_reduce(const CurveSpec& spec, unsigned n);

/// #X(F_{p^n}) via the rank method, for any of the four families.
Integer count_points_rank(const CurveSpec& spec, unsigned n);

}  // namespace aszeta
