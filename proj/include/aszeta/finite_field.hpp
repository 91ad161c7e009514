#pragma once

// Dense-vector model of F_{p^n} = F_p[x]/(m(x)) with Frobenius and trace maps.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace aszeta {

using Residue = std::uint32_t;

/// An odd prime p. Construction rejects composites and p = 2.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }
  operator std::uint32_t() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

Residue mod_pow(Residue base, std::uint64_t exp, std::uint32_t p);
Residue mod_inverse(Residue a, std::uint32_t p);
Residue to_residue(std::int64_t a, std::uint32_t p);

/// Legendre symbol via Euler's criterion; returns -1, 0 or +1.
int legendre(std::int64_t a, PrimeModulus p);

/// Square matrix over F_p acting on coefficient vectors (column j = image of x^j).
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::uint32_t p, std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  Residue& at(std::size_t row, std::size_t col) { return m_[row * n_ + col]; }
  Residue at(std::size_t row, std::size_t col) const { return m_[row * n_ + col]; }

  void apply(std::span<const Residue> in, std::span<Residue> out) const;
  LinearMap compose(const LinearMap& inner) const;  // this ∘ inner

 private:
  std::uint32_t p_ = 0;
  std::size_t n_ = 0;
  std::vector<Residue> m_;  // row-major
};

class FieldElement;

/// F_{p^n} with a deterministic irreducible modulus: the lexicographically
/// smallest monic irreducible of degree n, comparing constant term first.
/// Immutable; copies share the precomputed tables.
class FieldTower {
 public:
  FieldTower(PrimeModulus p, unsigned n);
  FieldTower(PrimeModulus p, std::vector<Residue> modulus);  // caller-chosen monic irreducible

  PrimeModulus prime() const noexcept { return data_->p; }
  std::uint32_t p() const noexcept { return data_->p.value(); }
  unsigned degree() const noexcept { return data_->n; }
  const std::vector<Residue>& modulus() const noexcept { return data_->modulus; }

  /// out = a*b. `scratch` must hold at least 2n-1 words.
  void mul(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out,
           std::span<std::uint64_t> scratch) const;
  /// out = a^(p^power); power is taken mod n.
  void frobenius(std::span<const Residue> a, std::span<Residue> out, unsigned power = 1) const;
  const LinearMap& frobenius_map() const noexcept { return data_->frob; }
  LinearMap frobenius_power_map(unsigned power) const;
  Residue abs_trace(std::span<const Residue> a) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(Residue c) const;
  FieldElement generator() const;  // the class of x
  FieldElement element(std::vector<Residue> coeffs) const;
  /// Element whose coefficient vector is the base-p digits of `index`, constant term least significant.
  FieldElement from_index(std::uint64_t index) const;

  friend bool operator==(const FieldTower& a, const FieldTower& b) {
    return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus);
  }

 private:
  struct Data {
    PrimeModulus p;
    unsigned n;
    std::vector<Residue> modulus;              // length n+1, monic
    std::vector<std::vector<Residue>> reduce;  // x^(n+i) mod m, i < n-1
    LinearMap frob;
    std::vector<Residue> trace;  // Tr(x^i)
  };
  void init();
  std::shared_ptr<Data> data_;
};

FieldTower build_tower(PrimeModulus p, unsigned n);

class FieldElement {
 public:
  FieldElement(FieldTower tower, std::vector<Residue> coeffs);

  const FieldTower& tower() const noexcept { return tower_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  bool in_prime_field() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement scaled(Residue c) const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(unsigned power = 1) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.tower_ == b.tower_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldTower tower_;
  std::vector<Residue> coeffs_;
};

Residue abs_trace(const FieldElement& e);

/// Σ_{i<n/d} e^(p^(d i)), the trace down to the degree-d subfield. Throws BadInput if d ∤ n.
FieldElement rel_trace(const FieldElement& e, unsigned d);

/// Σ_{i<d} e^(p^i) for e in the degree-d subfield; this is Tr_{F_{p^d}/F_p}(e).
Residue subfield_trace(const FieldElement& e, unsigned d);

namespace poly {
// Dense polynomials over F_p, lowest degree first, no trailing zeros (zero = empty).
using Poly = std::vector<Residue>;
void trim(Poly& a);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly rem(Poly a, const Poly& m, std::uint32_t p);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// Distinct-degree test: gcd(x^(p^i) - x, m) = 1 for all i <= deg(m)/2.
bool is_irreducible(const Poly& m, std::uint32_t p);
}  // namespace poly

}  // namespace aszeta
