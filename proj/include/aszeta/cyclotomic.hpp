#pragma once

// Exact arithmetic in Z[ζ_m]. Elements are kept in the group ring Z[C_m]
// (length-m coefficient vectors on 1, ζ, ..., ζ^(m-1)), where multiplying by a
// root of unity is a rotation. Comparison and rationality tests go through the
// canonical remainder modulo the cyclotomic polynomial Φ_m.

#include <cstdint>
#include <optional>
#include <vector>

#include "aszeta/integer.hpp"

namespace aszeta {

/// Φ_m with integer coefficients, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

class CyclotomicRing {
 public:
  using Element = std::vector<Integer>;  // length m

  explicit CyclotomicRing(unsigned m);

  unsigned order() const noexcept { return m_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(phi_.size() - 1); }
  const std::vector<Integer>& phi() const noexcept { return phi_; }

  Element zero() const { return Element(m_); }
  Element constant(const Integer& c) const;
  Element root(std::int64_t e) const;  // ζ^e

  /// dst += factor · ζ^shift · src
  void add_rotated(Element& dst, const Element& src, std::int64_t shift, const Integer& factor) const;
  Element multiply(const Element& a, const Element& b) const;

  /// Remainder modulo Φ_m, length degree(); the canonical form.
  std::vector<Integer> reduce(const Element& a) const;
  bool equal(const Element& a, const Element& b) const;
  /// The rational integer a represents, if it is one.
  std::optional<Integer> as_integer(const Element& a) const;

  /// √p via the quadratic Gauss sum g = Σ_t (t/p) ζ_p^t, with ζ_p = ζ^(m/p):
  /// g = √p for p ≡ 1 (mod 4) and g = i√p for p ≡ 3 (mod 4). Needs 4p | m.
  Element sqrt_p(std::uint32_t p) const;

 private:
  unsigned index(std::int64_t e) const {
    const auto m = static_cast<std::int64_t>(m_);
    return static_cast<unsigned>(((e % m) + m) % m);
  }
  unsigned m_;
  std::vector<Integer> phi_;
};

}  // namespace aszeta
