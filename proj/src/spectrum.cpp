#include "aszeta/spectrum.hpp"

#include <json.hpp>

#include <numeric>

#include "aszeta/cyclotomic.hpp"
#include "aszeta/errors.hpp"

namespace aszeta {

std::uint64_t WeilSpectrum::total() const { return std::accumulate(u.begin(), u.end(), std::uint64_t{0}); }

WeilSpectrum WeilSpectrum::lifted(unsigned s_prime) const {
  if (s_prime % s != 0) throw BadInput("lifted period must be a multiple of the current period");
  WeilSpectrum r{p, s_prime, std::vector<std::uint64_t>(s_prime, 0)};
  const unsigned scale = s_prime / s;
  for (unsigned j = 0; j < s; ++j) r.u[j * scale] = u[j];
  return r;
}

unsigned period_bound(const CurveSpec& spec) {
  spec.check();
  const std::uint32_t p = spec.p;
  switch (spec.family) {
    case Family::B0: return 4;
    case Family::C0: return 4 * p;
    case Family::B: return 4 * spec.k;
    case Family::C: return static_cast<unsigned>(4 * ck_level(p, spec.k));
  }
  throw BadInput("unknown family");
}

unsigned period(const CurveSpec& spec) {
  const unsigned bound = period_bound(spec);
  const Integer two_g = 2 * genus(spec);
  for (unsigned n = 1; n <= bound; ++n) {
    if (bound % n != 0) continue;
    const Deficit d = deficit(spec, n);
    if (d.v == 0 && d.u == two_g) return n;
  }
  throw InvariantViolation("no divisor of " + std::to_string(bound) + " makes " + spec.label() + " minimal");
}

WeilSpectrum spectrum_from_deficits(const std::vector<Deficit>& deficits, PrimeModulus p, const Integer& g) {
  if (deficits.empty()) throw BadInput("need at least one deficit");
  const auto s = static_cast<unsigned>(deficits.size());
  const unsigned m = std::lcm(s, 4 * p.value());
  const unsigned step = m / s;  // ω_s = ζ_m^step
  const CyclotomicRing ring(m);
  const auto sq = ring.sqrt_p(p);
  const auto unit = ring.constant(1);

  auto embed = [&](const Deficit& d, std::int64_t shift, CyclotomicRing::Element& acc) {
    if (d.u != 0) ring.add_rotated(acc, unit, shift, d.u);
    if (d.v != 0) ring.add_rotated(acc, sq, shift, d.v);
  };

  WeilSpectrum w{p, s, std::vector<std::uint64_t>(s, 0)};
  for (unsigned j = 0; j < s; ++j) {
    auto acc = ring.zero();
    for (unsigned n = 1; n <= s; ++n) embed(deficits[n - 1], -static_cast<std::int64_t>(std::uint64_t{j} * n % s) * step, acc);
    const auto value = ring.as_integer(acc);
    if (!value) throw InvariantViolation("multiplicity u_" + std::to_string(j) + " is not rational");
    if (!mpz_divisible_ui_p(value->get_mpz_t(), s))
      throw InvariantViolation("multiplicity u_" + std::to_string(j) + " = " + value->get_str() + "/" +
                               std::to_string(s) + " is not an integer");
    Integer uj;
    mpz_divexact_ui(uj.get_mpz_t(), value->get_mpz_t(), s);
    if (uj < 0) throw InvariantViolation("multiplicity u_" + std::to_string(j) + " = " + uj.get_str() + " is negative");
    w.u[j] = uj.get_ui();
  }
  if (Integer(static_cast<unsigned long>(w.total())) != 2 * g)
    throw InvariantViolation("multiplicities sum to " + std::to_string(w.total()) + ", expected 2g = " +
                             Integer(2 * g).get_str());

  for (unsigned n = 1; n <= s; ++n) {
    auto synth = ring.zero();
    for (unsigned j = 0; j < s; ++j)
      if (w.u[j]) synth[std::uint64_t{j} * n % s * step] += static_cast<unsigned long>(w.u[j]);
    auto expected = ring.zero();
    embed(deficits[n - 1], 0, expected);
    if (!ring.equal(synth, expected))
      throw InvariantViolation("spectrum does not re-synthesize D_" + std::to_string(n));
  }
  return w;
}

WeilSpectrum spectrum_of(const CurveSpec& spec) {
  const unsigned s = period(spec);
  std::vector<Deficit> d(s);
  for (unsigned n = 1; n <= s; ++n) d[n - 1] = deficit(spec, n);
  return spectrum_from_deficits(d, spec.p, genus(spec));
}

bool conjugation_symmetric(const WeilSpectrum& w) {
  for (unsigned j = 0; j < w.s; ++j)
    if (w.u[j] != w.u[(w.s - j) % w.s]) return false;
  return true;
}

LPolynomial expand_spectrum(const WeilSpectrum& w) {
  const std::uint32_t p = w.p;
  const unsigned m = std::lcm(w.s, 4 * p);
  const unsigned step = m / w.s;
  const CyclotomicRing ring(m);
  const std::uint64_t deg = w.total();
  if (deg % 2 != 0) throw InvariantViolation("odd number of reciprocal roots");

  // P(X) = Π (1 - ω^j X)^(u_j); then L(T) = P(√p T).
  std::vector<CyclotomicRing::Element> P(deg + 1, ring.zero());
  P[0][0] = 1;
  std::size_t cur = 0;
  const Integer minus_one = -1;
  for (unsigned j = 0; j < w.s; ++j)
    for (std::uint64_t rep = 0; rep < w.u[j]; ++rep) {
      for (std::size_t i = cur + 1; i >= 1; --i) ring.add_rotated(P[i], P[i - 1], std::int64_t{j} * step, minus_one);
      ++cur;
    }

  const auto sq = ring.sqrt_p(p);
  std::vector<Integer> c(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) {
    const auto v = i % 2 == 0 ? ring.as_integer(P[i]) : ring.as_integer(ring.multiply(sq, P[i]));
    if (!v) throw InvariantViolation("coefficient of T^" + std::to_string(i) + " is not a rational integer");
    c[i] = *v * ipow(p, i / 2);
  }
  return LPolynomial{w.p, 1, static_cast<unsigned>(deg / 2), std::move(c)};
}

bool spectrum_difference_nonneg(const WeilSpectrum& inner, const WeilSpectrum& outer) {
  if (!(inner.p == outer.p)) throw BadInput("spectra over different primes");
  const unsigned s = std::lcm(inner.s, outer.s);
  const WeilSpectrum a = inner.lifted(s), b = outer.lifted(s);
  for (unsigned j = 0; j < s; ++j)
    if (b.u[j] < a.u[j]) return false;
  return true;
}

bool spectrum_difference_nonneg(const CurveSpec& inner, const CurveSpec& outer) {
  return spectrum_difference_nonneg(spectrum_of(inner), spectrum_of(outer));
}

namespace {

void trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

DivisionResult divide(const LPolynomial& divisor, const LPolynomial& dividend) {
  if (!(divisor.p == dividend.p) || divisor.r != dividend.r)
    throw BadInput("L-polynomials are over different base fields");
  std::vector<Rational> b(divisor.coeffs.begin(), divisor.coeffs.end());
  std::vector<Rational> rem(dividend.coeffs.begin(), dividend.coeffs.end());
  trim(b);
  trim(rem);
  if (b.empty()) throw BadInput("division by the zero polynomial");
  const std::size_t db = b.size() - 1;
  std::vector<Rational> quo(rem.size() > db ? rem.size() - db : 0);
  while (rem.size() > db) {
    const std::size_t shift = rem.size() - 1 - db;
    Rational f = rem.back() / b.back();
    quo[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= f * b[i];
    rem.back() = 0;  // exact by construction
    trim(rem);
  }
  trim(quo);
  const bool ok = rem.empty();
  return DivisionResult{ok, std::move(quo), std::move(rem)};
}

bool lpoly_divides(const LPolynomial& divisor, const LPolynomial& dividend) {
  return divide(divisor, dividend).divides;
}

bool period_divides(const CurveSpec& inner, const CurveSpec& outer) {
  return period(outer) % period(inner) == 0;
}

std::uint64_t sqrtp_multiplicity(const CurveSpec& spec) { return spectrum_of(spec).u[0]; }

std::string certificate_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::None: return "none";
    case CertificateKind::PeriodMismatch: return "period";
    case CertificateKind::SqrtPMultiplicity: return "sqrt-p multiplicity";
    case CertificateKind::SpectrumExcess: return "spectrum excess";
  }
  return "?";
}

NonDivisibilityCertificate nondivisibility_certificate(const CurveSpec& inner, const CurveSpec& outer) {
  const unsigned si = period(inner), so = period(outer);
  if (so % si != 0)
    return {CertificateKind::PeriodMismatch,
            "period " + std::to_string(si) + " of " + inner.label() + " does not divide period " + std::to_string(so) +
                " of " + outer.label()};
  const WeilSpectrum wi = spectrum_of(inner), wo = spectrum_of(outer);
  if (wi.u[0] > wo.u[0])
    return {CertificateKind::SqrtPMultiplicity, "+sqrt(p) has multiplicity " + std::to_string(wi.u[0]) + " in " +
                                                    inner.label() + " but " + std::to_string(wo.u[0]) + " in " +
                                                    outer.label()};
  const unsigned s = std::lcm(si, so);
  const WeilSpectrum a = wi.lifted(s), b = wo.lifted(s);
  for (unsigned j = 0; j < s; ++j)
    if (a.u[j] > b.u[j])
      return {CertificateKind::SpectrumExcess, "root sqrt(p)*w_" + std::to_string(s) + "^" + std::to_string(j) +
                                                   " has multiplicity " + std::to_string(a.u[j]) + " > " +
                                                   std::to_string(b.u[j])};
  return {};
}

std::string spectrum_json(const WeilSpectrum& w) {
  nlohmann::ordered_json j;
  j["p"] = w.p.value();
  j["s"] = w.s;
  auto arr = nlohmann::ordered_json::array();
  for (auto x : w.u) arr.push_back(std::to_string(x));
  j["u"] = std::move(arr);
  return j.dump();
}

}  // namespace aszeta
