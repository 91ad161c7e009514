#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aszeta/errors.hpp"
#include "aszeta/formulas.hpp"
#include "aszeta/zeta.hpp"
#include "support.hpp"

using namespace aszeta;

namespace {

std::vector<Integer> ints(std::initializer_list<const char*> xs) {
  std::vector<Integer> out;
  for (const char* x : xs) out.emplace_back(x);
  return out;
}

const auto kB2 = ints({"1", "0", "3", "0", "0", "0", "0", "0", "-162", "0", "-486", "0", "0", "0", "0", "0", "6561", "0",
                       "19683"});
const auto kC2 = ints({"1", "3", "3", "0", "0", "0", "0", "0", "81", "243", "243", "0", "0", "0", "0", "0", "6561",
                       "19683", "19683"});
const auto kBaseChange3 = ints({"1", "0", "27", "0", "0", "0", "0", "0", "-1062882", "0", "-28697814", "0", "0", "0",
                                "0", "0", "282429536481", "0", "7625597484987"});

}  // namespace

TEST_CASE("golden L-polynomials over F_3") {
  CHECK(lpoly_of(CurveSpec::bk(3, 2)).coeffs == kB2);
  CHECK(lpoly_of(CurveSpec::ck(3, 2)).coeffs == kC2);
  CHECK(render(lpoly_of(CurveSpec::bk(3, 2))) == "1 + 3*T^2 - 162*T^8 - 486*T^10 + 6561*T^16 + 19683*T^18");
}

TEST_CASE("base change to F_27") {
  const LPolynomial b = base_change(lpoly_of(CurveSpec::bk(3, 2)), 3);
  const LPolynomial c = base_change(lpoly_of(CurveSpec::ck(3, 2)), 3);
  CHECK(b.coeffs == kBaseChange3);
  CHECK(c.coeffs == kBaseChange3);
  CHECK(b.r == 3);
  CHECK(validate(b).empty());
}

TEST_CASE("genus-one sanity: B0 over F_3") {
  // #B0(F_3) = 4, so L = 1 + 0 T + 3 T^2.
  const LPolynomial L = lpoly_of(CurveSpec::b0(3));
  CHECK(L.coeffs == ints({"1", "0", "3"}));
}

TEST_CASE("L-polynomial reproduces counts beyond 2g") {
  for (const auto& spec : {CurveSpec::ck(3, 1), CurveSpec::bk(5, 1), CurveSpec::c0(7), CurveSpec::ck(3, 2)}) {
    const LPolynomial L = lpoly_of(spec);
    for (unsigned n = 1; n <= 3 * L.g + 5; ++n) CHECK(counts_from_lpoly(L, n) == count_points_formula(spec, n));
  }
}

TEST_CASE("L-polynomial from brute-force counts") {
  const CurveSpec spec = CurveSpec::ck(3, 1);  // g = 3, counts needed up to F_{3^6}
  std::vector<Integer> counts;
  for (unsigned n = 1; n <= 6; ++n)
    counts.emplace_back(static_cast<unsigned long>(
        aszeta::testing::naive_point_count(spec, build_tower(PrimeModulus(3), n))));
  CHECK(lpoly_from_counts(counts, PrimeModulus(3), 1, 3) == lpoly_of(spec));
}

TEST_CASE("validation catches perturbations") {
  LPolynomial L = lpoly_of(CurveSpec::bk(3, 2));
  CHECK(validate(L).empty());
  LPolynomial bad = L;
  bad.coeffs[2] += 1;
  const auto v = validate(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == ViolationKind::FunctionalEquation);

  bad = L;
  bad.coeffs[18] += 1;
  CHECK_FALSE(validate(bad).empty());

  bad = L;
  bad.coeffs[1] = 1;  // valuation 0 < 1/2
  bool valuation = false;
  for (const auto& x : validate(bad)) valuation |= x.kind == ViolationKind::SupersingularValuation;
  CHECK(valuation);

  bad = L;
  bad.coeffs.pop_back();
  CHECK(validate(bad).front().kind == ViolationKind::Degree);
}

TEST_CASE("non-curve counts break the Newton recurrence") {
  std::vector<Integer> counts = {Integer(4), Integer(16)};
  CHECK_NOTHROW(lpoly_from_counts(counts, PrimeModulus(3), 1, 1));
  counts[1] = 17;
  CHECK_THROWS_AS(lpoly_from_counts(counts, PrimeModulus(3), 1, 1), InvariantViolation);
  CHECK_THROWS_AS(lpoly_from_counts(counts, PrimeModulus(3), 1, 2), BadInput);
}

TEST_CASE("base change composes") {
  const LPolynomial L = lpoly_of(CurveSpec::ck(3, 1));
  CHECK(base_change(base_change(L, 2), 3) == base_change(L, 6));
  CHECK(base_change(base_change(L, 3), 2) == base_change(L, 6));
  CHECK(base_change(L, 1) == L);
  CHECK(base_change(L, 4) == lpoly_of(CurveSpec::ck(3, 1), 4));
}

TEST_CASE("render and parse round trip") {
  for (const auto& spec : {CurveSpec::bk(3, 2), CurveSpec::ck(3, 2), CurveSpec::c0(5), CurveSpec::ck(5, 1)}) {
    const LPolynomial L = lpoly_of(spec);
    const std::string text = render(L);
    const LPolynomial back = parse_lpoly(text, spec.p, 1);
    CHECK(back == L);
    CHECK(render(back) == text);
  }
  CHECK(parse_lpoly("1 - T + 3*T^2", PrimeModulus(3), 1).coeffs == ints({"1", "-1", "3"}));
  CHECK_THROWS_AS(parse_lpoly("1 + T", PrimeModulus(3), 1), BadInput);
  CHECK_THROWS_AS(parse_lpoly("1 + * T^2", PrimeModulus(3), 1), BadInput);
  CHECK_THROWS_AS(parse_lpoly("1 + 3*T^", PrimeModulus(3), 1), BadInput);
}

TEST_CASE("comparison reports a T -> -T discrepancy") {
  const LPolynomial L = lpoly_of(CurveSpec::ck(3, 2));
  const LPolyComparison same = compare_lpoly(L, L);
  CHECK(same.exact);
  CHECK(same.report() == "match");
  const LPolyComparison flipped = compare_lpoly(L, negate_variable(L));
  CHECK_FALSE(flipped.exact);
  CHECK(flipped.even_match);
  CHECK(flipped.odd_match_negated);
  CHECK(flipped.differing == std::vector<unsigned>{1, 9, 17});
  CHECK(flipped.report().find("opposite sign") != std::string::npos);
}
