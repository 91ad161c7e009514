#pragma once

// Independent oracles shared by the unit tests.

#include <cstdint>
#include <vector>

#include "aszeta/curves.hpp"
#include "aszeta/finite_field.hpp"

namespace aszeta::testing {

inline std::uint64_t index_of(const FieldElement& e) {
  std::uint64_t idx = 0;
  const auto c = e.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * e.tower().p() + c[i];
  return idx;
}

inline std::uint64_t field_size(const FieldTower& t) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < t.degree(); ++i) q *= t.p();
  return q;
}

// #X over the tower's field by tabulating y^p - y for every y, then looking up
// f(x) for every x. Uses no trace map; the point at infinity adds 1.
inline std::uint64_t naive_point_count(const CurveSpec& spec, const FieldTower& tower) {
  const std::uint64_t q = field_size(tower);
  std::vector<std::uint32_t> hits(q, 0);
  for (std::uint64_t i = 0; i < q; ++i) {
    const FieldElement y = tower.from_index(i);
    ++hits[index_of(y.pow(tower.p()) - y)];
  }
  std::uint64_t e = 1;
  for (unsigned i = 0; i < spec.k; ++i) e *= spec.p;
  ++e;
  std::uint64_t affine = 0;
  for (std::uint64_t i = 0; i < q; ++i) {
    const FieldElement x = tower.from_index(i);
    FieldElement fx = tower.zero();
    switch (spec.family) {
      case Family::B0: fx = x * x; break;
      case Family::C0: fx = x * x + x; break;
      case Family::B: fx = x.pow(e); break;
      case Family::C: fx = x.pow(e) + x.scaled(spec.a); break;
    }
    affine += hits[index_of(fx)];
  }
  return affine + 1;
}

// A monic irreducible of degree n other than `avoid`.
inline std::vector<Residue> other_irreducible(std::uint32_t p, unsigned n, const std::vector<Residue>& avoid) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Residue> m(n + 1, 0);
    m[n] = 1;
    std::uint64_t r = idx;
    for (unsigned i = 0; i < n; ++i, r /= p) m[i] = static_cast<Residue>(r % p);
    if (m != avoid && poly::is_irreducible(m, p)) return m;
  }
  return {};
}

}  // namespace aszeta::testing
