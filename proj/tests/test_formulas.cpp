#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "aszeta/errors.hpp"
#include "aszeta/formulas.hpp"
#include "aszeta/spectrum.hpp"
#include "support.hpp"

using namespace aszeta;
using aszeta::testing::naive_point_count;

namespace {

std::vector<CurveSpec> family_members(std::uint32_t p) {
  return {CurveSpec::b0(p), CurveSpec::c0(p), CurveSpec::bk(p, 1), CurveSpec::bk(p, 2),
          CurveSpec::ck(p, 1), CurveSpec::ck(p, 2), CurveSpec::bk(p, 3), CurveSpec::ck(p, 3)};
}

}  // namespace

TEST_CASE("point counts over the prime field and its quadratic extension") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    CHECK(count_points_formula(CurveSpec::b0(p), 1) == p + 1);
    CHECK(count_points_formula(CurveSpec::c0(p), 1) == 2 * p + 1);
    const Integer q2 = Integer(p) * p + 1;
    const Integer shift = Integer(p - 1) * p;
    CHECK(count_points_formula(CurveSpec::b0(p), 2) == (p % 4 == 1 ? Integer(q2 - shift) : Integer(q2 + shift)));
  }
}

TEST_CASE("B0 deficits for p = 5") {
  for (unsigned n = 1; n <= 4; ++n) {
    const Deficit d = deficit_B0(5, n);
    CHECK(d.v == 0);
    CHECK(d.u == (n % 2 ? 0 : 4));
  }
}

TEST_CASE("C_2 over F_3: first table rows") {
  CHECK(deficit_Ck(3, 2, 1) == Deficit::sqrt_p(-1));
  const FormulaCase row = formula_case_Ck(3, 2, 1);
  CHECK(row.d == 1);
  CHECK(formula_case_Ck(3, 2, 24).d == 24);
  CHECK(ck_level(3, 2) == 6);
  CHECK(ck_level(3, 3) == 3);
}

TEST_CASE("closed forms match the naive count") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const unsigned n_max = p == 3 ? 6 : (p == 5 ? 4 : 3);
    for (unsigned n = 1; n <= n_max; ++n) {
      const FieldTower t = build_tower(PrimeModulus(p), n);
      for (const auto& spec : family_members(p)) {
        INFO(spec.label(), " n=", n);
        const Integer count(static_cast<unsigned long>(naive_point_count(spec, t)));
        CHECK(count_points_formula(spec, n) == count);
        CHECK(deficit_from_count(count, p, n) == deficit(spec, n));
      }
    }
  }
}

TEST_CASE("the corrected B_k branch") {
  // B_1 over F_9: d = gcd(2, 4) = 2 does not divide k = 1, d/2 = 1 does.
  CHECK(formula_case_Bk(3, 1, 2).deficit == Deficit::integer(2));
  CHECK(count_points_formula(CurveSpec::bk(3, 1), 2) == 4);
}

TEST_CASE("deficits respect the Weil bound") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (const auto& spec : family_members(p))
      for (unsigned n = 1; n <= 60; ++n) CHECK(deficit_within(deficit(spec, n), p, 2 * genus(spec)));
}

TEST_CASE("reduction rule reproduces the closed forms") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (const auto& spec : family_members(p)) {
      const unsigned s = period_bound(spec);
      std::map<std::uint64_t, Deficit> base;
      for (unsigned m = 1; m <= s; ++m)
        if (s % m == 0) base[m] = deficit(spec, m);
      for (unsigned n = 1; n <= 3 * s; ++n) {
        INFO(spec.label(), " n=", n);
        CHECK(reduce_supersingular(base, s, n, PrimeModulus(p)) == deficit(spec, n));
      }
    }
  CHECK_THROWS_AS(reduce_supersingular({}, 4, 2, PrimeModulus(3)), BadInput);
}

TEST_CASE("minimal and maximal levels") {
  // B0 over F_3 (g = 1): maximal over F_9, minimal over F_81.
  const Integer g = genus(CurveSpec::b0(3));
  CHECK(is_maximal(3, 2, g, deficit_B0(3, 2)));
  CHECK(is_minimal(3, 4, g, deficit_B0(3, 4)));
  CHECK_FALSE(is_minimal(3, 2, g, deficit_B0(3, 2)));
  CHECK_FALSE(is_maximal(3, 1, g, deficit_B0(3, 1)));
  // B_k is minimal over F_{p^(4k)}.
  for (unsigned k : {1u, 2u, 3u}) {
    const CurveSpec b = CurveSpec::bk(3, k);
    CHECK(is_minimal(3, 4 * k, genus(b), deficit(b, 4 * k)));
  }
}

TEST_CASE("count and deficit round trip") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const Deficit d = deficit(CurveSpec::ck(5, 2), n);
    CHECK(deficit_from_count(count_from_deficit(d, 5, n), 5, n) == d);
  }
  CHECK_THROWS_AS(deficit_from_count(Integer(5), 3, 2), InvariantViolation);
  CHECK_THROWS_AS(count_from_deficit(Deficit::sqrt_p(1), 3, 2), InvariantViolation);
  CHECK_THROWS_AS(deficit_Bk(3, 1, 0), BadInput);
}

TEST_CASE("rendering") {
  CHECK(to_string(Deficit::integer(-4)) == "-4");
  CHECK(to_string(Deficit::sqrt_p(2)) == "2*sqrt(p)");
}
