#pragma once

// Weil spectra: the reciprocal roots of a supersingular L-polynomial are
// √p·ω_s^j (ω_s = e^(2πi/s)) with multiplicity u_j. The multiplicities are
// recovered from the deficit sequence by an inverse DFT carried out exactly in
// Z[ζ_m], m = lcm(s, 4p), with √p written as a Gauss sum.

#include <cstdint>
#include <string>
#include <vector>

#include "aszeta/curves.hpp"
#include "aszeta/formulas.hpp"
#include "aszeta/integer.hpp"
#include "aszeta/zeta.hpp"

namespace aszeta {

struct WeilSpectrum {
  PrimeModulus p;
  unsigned s;
  std::vector<std::uint64_t> u;  // u[j] = multiplicity of √p·ω_s^j

  std::uint64_t total() const;
  /// Same roots indexed at period s' (s | s'): index j moves to j·s'/s.
  WeilSpectrum lifted(unsigned s_prime) const;
};

/// Upper bound on the period from the family: 4 (B0), 4p (C0), 4k (B), 4l (C).
unsigned period_bound(const CurveSpec& spec);

/// Smallest divisor n of the bound with D_n = 2g, i.e. all ζ_i^n = 1.
unsigned period(const CurveSpec& spec);

/// deficits[n-1] = D_n for n = 1..s. Throws InvariantViolation unless every u_j
/// is a nonnegative integer, Σ u_j = 2g, and Σ_j u_j ω^(jn) re-synthesizes D_n.
WeilSpectrum spectrum_from_deficits(const std::vector<Deficit>& deficits, PrimeModulus p, const Integer& genus);

/// Spectrum at the curve's period from closed-form deficits.
WeilSpectrum spectrum_of(const CurveSpec& spec);

/// u_j = u_{(s-j) mod s} for all j.
bool conjugation_symmetric(const WeilSpectrum& w);

/// Π_j (1 - √p ω^j T)^(u_j), expanded exactly; every coefficient must come out
/// a rational integer.
LPolynomial expand_spectrum(const WeilSpectrum& w);

/// u_j(outer) - u_j(inner) >= 0 for all j at the common period.
bool spectrum_difference_nonneg(const WeilSpectrum& inner, const WeilSpectrum& outer);
bool spectrum_difference_nonneg(const CurveSpec& inner, const CurveSpec& outer);

struct DivisionResult {
  bool divides;
  std::vector<Rational> quotient;   // ascending
  std::vector<Rational> remainder;  // ascending, trimmed; empty iff divides
};

/// Exact long division L2 = Q·L1 + R over Q.
DivisionResult divide(const LPolynomial& divisor, const LPolynomial& dividend);
bool lpoly_divides(const LPolynomial& divisor, const LPolynomial& dividend);

/// period(inner) | period(outer); false certifies L(inner) ∤ L(outer).
bool period_divides(const CurveSpec& inner, const CurveSpec& outer);

/// u_0: multiplicity of the reciprocal root +√p.
std::uint64_t sqrtp_multiplicity(const CurveSpec& spec);

enum class CertificateKind { None, PeriodMismatch, SqrtPMultiplicity, SpectrumExcess };

struct NonDivisibilityCertificate {
  CertificateKind kind = CertificateKind::None;
  std::string detail;
};

/// Cheapest available witness that L(inner) does not divide L(outer): period
/// test first, then the multiplicity of +√p, then any spectral excess.
NonDivisibilityCertificate nondivisibility_certificate(const CurveSpec& inner, const CurveSpec& outer);

std::string certificate_name(CertificateKind k);

/// {"p": 3, "s": 24, "u": ["0", ...]}; multiplicities as decimal strings.
std::string spectrum_json(const WeilSpectrum& w);

}  // namespace aszeta
