#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "aszeta/cyclotomic.hpp"
#include "aszeta/errors.hpp"
#include "aszeta/spectrum.hpp"

using namespace aszeta;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<CurveSpec> curves_for(std::uint32_t p) {
  return {CurveSpec::b0(p), CurveSpec::c0(p), CurveSpec::bk(p, 1), CurveSpec::bk(p, 2), CurveSpec::ck(p, 1),
          CurveSpec::ck(p, 2)};
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(9) == ints({1, 0, 0, 1, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(20).size() == 9);  // phi(20) = 8
}

TEST_CASE("cyclotomic ring arithmetic") {
  const CyclotomicRing R(12);
  CHECK(R.degree() == 4);
  // ζ^6 = -1, ζ^3 = i, ζ^4 + ζ^8 = -1
  CHECK(R.as_integer(R.root(6)) == Integer(-1));
  CHECK(R.as_integer(R.multiply(R.root(3), R.root(3))) == Integer(-1));
  auto sum = R.root(4);
  R.add_rotated(sum, R.root(0), 8, 1);
  CHECK(R.as_integer(sum) == Integer(-1));
  CHECK_FALSE(R.as_integer(R.root(1)).has_value());
  CHECK(R.equal(R.root(13), R.root(1)));
}

TEST_CASE("Gauss-sum square roots") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const CyclotomicRing R(4 * p);
    const auto g = R.sqrt_p(p);
    CHECK(R.as_integer(R.multiply(g, g)) == Integer(p));
  }
}

TEST_CASE("periods") {
  CHECK(period(CurveSpec::b0(3)) == 4);
  CHECK(period(CurveSpec::b0(5)) == 2);
  CHECK(period(CurveSpec::c0(3)) == 12);
  CHECK(period(CurveSpec::c0(5)) == 10);
  CHECK(period(CurveSpec::bk(3, 2)) == 8);
  CHECK(period(CurveSpec::bk(3, 3)) == 12);
  CHECK(period(CurveSpec::ck(3, 2)) == 24);
  CHECK(period(CurveSpec::ck(3, 3)) == 12);
}

TEST_CASE("C_2 over F_3 spectrum") {
  const WeilSpectrum w = spectrum_of(CurveSpec::ck(3, 2));
  CHECK(w.s == 24);
  CHECK(w.total() == 18);
  CHECK(w.u[0] == 0);
  CHECK(conjugation_symmetric(w));
  CHECK(sqrtp_multiplicity(CurveSpec::ck(3, 2)) == 0);
  CHECK(sqrtp_multiplicity(CurveSpec::ck(3, 3)) > 0);
}

TEST_CASE("spectrum integrity and expansion") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (const auto& spec : curves_for(p)) {
      INFO(spec.label());
      const WeilSpectrum w = spectrum_of(spec);
      CHECK(Integer(static_cast<unsigned long>(w.total())) == 2 * genus(spec));
      CHECK(conjugation_symmetric(w));
      CHECK(expand_spectrum(w) == lpoly_of(spec));
    }
}

TEST_CASE("inverse DFT rejects inconsistent deficits") {
  const CurveSpec spec = CurveSpec::ck(3, 1);
  std::vector<Deficit> ds;
  for (unsigned n = 1; n <= period(spec); ++n) ds.push_back(deficit(spec, n));
  CHECK_NOTHROW(spectrum_from_deficits(ds, spec.p, genus(spec)));
  ds[1] = ds[1] * -1;
  CHECK_THROWS_AS(spectrum_from_deficits(ds, spec.p, genus(spec)), InvariantViolation);
}

TEST_CASE("lifting a spectrum") {
  const WeilSpectrum w = spectrum_of(CurveSpec::bk(3, 1));
  const WeilSpectrum l = w.lifted(w.s * 3);
  CHECK(l.total() == w.total());
  for (unsigned j = 0; j < w.s; ++j) CHECK(l.u[3 * j] == w.u[j]);
}

TEST_CASE("exact polynomial division") {
  const LPolynomial c1 = lpoly_of(CurveSpec::ck(3, 1));
  const LPolynomial c2 = lpoly_of(CurveSpec::ck(3, 2));
  const DivisionResult r = divide(c1, c2);
  CHECK(r.divides);
  CHECK(r.remainder.empty());
  CHECK(r.quotient.size() == c2.coeffs.size() - c1.coeffs.size() + 1);
  CHECK_FALSE(lpoly_divides(c2, c1));
  CHECK(lpoly_divides(c1, c1));
}

TEST_CASE("divisibility agrees with spectral containment") {
  for (auto [inner, outer] : {std::pair{CurveSpec::ck(3, 1), CurveSpec::ck(3, 2)},
                              {CurveSpec::ck(3, 1), CurveSpec::ck(3, 3)},
                              {CurveSpec::bk(3, 1), CurveSpec::bk(3, 2)},
                              {CurveSpec::ck(5, 1), CurveSpec::ck(5, 2)},
                              {CurveSpec::ck(3, 2), CurveSpec::ck(3, 3)},
                              {CurveSpec::bk(3, 2), CurveSpec::bk(3, 3)},
                              {CurveSpec::ck(3, 3), CurveSpec::ck(3, 2)}}) {
    INFO(inner.label(), " vs ", outer.label());
    CHECK(lpoly_divides(lpoly_of(inner), lpoly_of(outer)) == spectrum_difference_nonneg(inner, outer));
  }
}

TEST_CASE("non-divisibility certificates") {
  auto cert = nondivisibility_certificate(CurveSpec::ck(3, 2), CurveSpec::ck(3, 3));
  CHECK(cert.kind == CertificateKind::PeriodMismatch);
  cert = nondivisibility_certificate(CurveSpec::ck(3, 3), CurveSpec::ck(3, 2));
  CHECK(cert.kind == CertificateKind::SqrtPMultiplicity);
  cert = nondivisibility_certificate(CurveSpec::bk(3, 2), CurveSpec::bk(3, 3));
  CHECK(cert.kind == CertificateKind::PeriodMismatch);
  cert = nondivisibility_certificate(CurveSpec::ck(3, 1), CurveSpec::ck(3, 2));
  CHECK(cert.kind == CertificateKind::None);
  CHECK(certificate_name(CertificateKind::PeriodMismatch) == "period");
}

TEST_CASE("spectrum JSON") {
  const auto j = nlohmann::json::parse(spectrum_json(spectrum_of(CurveSpec::b0(3))));
  CHECK(j.at("p") == 3);
  CHECK(j.at("s") == 4);
  CHECK(j.at("u").size() == 4);
  CHECK(j.at("u")[0].is_string());
}
