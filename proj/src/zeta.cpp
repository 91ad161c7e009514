#include "aszeta/zeta.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "aszeta/errors.hpp"
#include "aszeta/formulas.hpp"

namespace aszeta {

namespace {

// c_0..c_len from t_m = #X(F_{q^m}) - q^m - 1 = -s_m via m c_m = Σ t_i c_{m-i}.
std::vector<Integer> coefficients_from_traces(const std::vector<Integer>& t, std::size_t len) {
  std::vector<Integer> c(len + 1);
  c[0] = 1;
  Integer acc;
  for (std::size_t m = 1; m <= len; ++m) {
    acc = 0;
    for (std::size_t i = 1; i <= m; ++i) acc += t[i - 1] * c[m - i];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), m))
      throw InvariantViolation("Newton recurrence is not integral at index " + std::to_string(m) +
                               "; the counts do not come from a curve");
    mpz_divexact_ui(c[m].get_mpz_t(), acc.get_mpz_t(), m);
  }
  return c;
}

}  // namespace

LPolynomial lpoly_from_counts(const std::vector<Integer>& counts, PrimeModulus p, unsigned r, unsigned g) {
  if (counts.size() != 2ull * g) throw BadInput("need exactly 2g point counts");
  const Integer q = ipow(p.value(), r);
  std::vector<Integer> t(counts.size());
  Integer qm = 1;
  for (std::size_t m = 1; m <= counts.size(); ++m) {
    qm *= q;
    t[m - 1] = counts[m - 1] - qm - 1;
  }
  return LPolynomial{p, r, g, coefficients_from_traces(t, 2ull * g)};
}

std::vector<Violation> validate(const LPolynomial& L) {
  std::vector<Violation> out;
  const unsigned deg = 2 * L.g;
  if (L.coeffs.size() != deg + 1u) {
    out.push_back({ViolationKind::Degree, 0, "expected " + std::to_string(deg + 1) + " coefficients"});
    return out;
  }
  const Integer q = L.q();
  if (L.coeffs[0] != 1) out.push_back({ViolationKind::LeadingCoefficients, 0, "c_0 != 1"});
  if (L.coeffs[deg] != ipow(q, L.g))
    out.push_back({ViolationKind::LeadingCoefficients, deg, "c_2g != q^g"});
  for (unsigned i = 0; i < L.g; ++i)
    if (L.coeffs[deg - i] != ipow(q, L.g - i) * L.coeffs[i])
      out.push_back({ViolationKind::FunctionalEquation, i,
                     "c_" + std::to_string(deg - i) + " != q^" + std::to_string(L.g - i) + " c_" + std::to_string(i)});
  for (unsigned i = 1; i <= deg; ++i) {
    if (L.coeffs[i] == 0) continue;
    // ord_p(c_i) >= i r / 2  <=>  2 ord_p(c_i) >= i r
    if (2ull * p_valuation(L.coeffs[i], L.p) < std::uint64_t{i} * L.r)
      out.push_back({ViolationKind::SupersingularValuation, i,
                     "ord_p(c_" + std::to_string(i) + ") < " + std::to_string(i) + "r/2"});
  }
  return out;
}

std::vector<Integer> power_sums(const LPolynomial& L, unsigned count) {
  // m c_m = Σ_{i=1}^m t_i c_{m-i} with t_i = -s_i, c_m = 0 beyond 2g.
  const std::size_t deg = L.coeffs.size() - 1;
  std::vector<Integer> t(count);
  Integer acc;
  for (std::size_t m = 1; m <= count; ++m) {
    acc = m <= deg ? Integer(L.coeffs[m] * static_cast<unsigned long>(m)) : Integer(0);
    for (std::size_t i = 1; i < m; ++i)
      if (m - i <= deg) acc -= t[i - 1] * L.coeffs[m - i];
    t[m - 1] = acc;  // c_0 = 1
  }
  for (auto& x : t) x = -x;
  return t;
}

Integer counts_from_lpoly(const LPolynomial& L, unsigned n) {
  if (n < 1) throw BadInput("n must be positive");
  return ipow(L.q(), n) + 1 - power_sums(L, n).back();
}

LPolynomial base_change(const LPolynomial& L, unsigned m) {
  if (m < 1) throw BadInput("base-change degree must be positive");
  if (m == 1) return L;
  const unsigned deg = 2 * L.g;
  const std::vector<Integer> s = power_sums(L, deg * m);
  std::vector<Integer> t(deg);
  for (unsigned j = 1; j <= deg; ++j) t[j - 1] = -s[j * m - 1];
  return LPolynomial{L.p, L.r * m, L.g, coefficients_from_traces(t, deg)};
}

LPolynomial lpoly_of(const CurveSpec& spec, unsigned r) {
  if (r < 1) throw BadInput("r must be positive");
  spec.check();
  const Integer g_big = genus(spec);
  if (!g_big.fits_uint_p()) throw BudgetExceeded("genus too large for an L-polynomial");
  const auto g = static_cast<unsigned>(g_big.get_ui());
  std::vector<Integer> counts(2ull * g);
  for (unsigned m = 1; m <= 2 * g; ++m) counts[m - 1] = count_points_formula(spec, std::uint64_t{m} * r);
  return lpoly_from_counts(counts, spec.p, r, g);
}

std::string render(const LPolynomial& L) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
    const Integer& c = L.coeffs[i];
    if (c == 0) continue;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    const Integer mag = abs(c);
    if (i == 0)
      os << mag;
    else {
      if (mag != 1) os << mag << '*';
      os << 'T';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

LPolynomial parse_lpoly(const std::string& text, PrimeModulus p, unsigned r) {
  std::vector<Integer> coeffs;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> LPolynomial {
    throw BadInput("cannot parse L-polynomial at offset " + std::to_string(pos) + ": " + why);
  };
  bool first = true;
  skip_ws();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      return fail("expected + or -");
    }
    Integer mag = 1;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > digits) mag = Integer(text.substr(digits, pos - digits));
    std::size_t exponent = 0;
    if (pos < text.size() && text[pos] == '*') ++pos;
    if (pos < text.size() && text[pos] == 'T') {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const std::size_t e0 = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == e0) return fail("missing exponent");
        exponent = std::stoul(text.substr(e0, pos - e0));
      }
    } else if (pos == digits) {
      return fail("expected a coefficient or T");
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] += sign * mag;
    first = false;
    skip_ws();
  }
  if (coeffs.empty() || (coeffs.size() - 1) % 2 != 0) return fail("degree must be even");
  const auto g = static_cast<unsigned>((coeffs.size() - 1) / 2);
  return LPolynomial{p, r, g, std::move(coeffs)};
}

LPolynomial negate_variable(const LPolynomial& L) {
  LPolynomial r = L;
  for (std::size_t i = 1; i < r.coeffs.size(); i += 2) r.coeffs[i] = -r.coeffs[i];
  return r;
}

LPolyComparison compare_lpoly(const LPolynomial& computed, const LPolynomial& reference) {
  LPolyComparison c;
  const std::size_t len = std::max(computed.coeffs.size(), reference.coeffs.size());
  auto coeff = [](const LPolynomial& L, std::size_t i) { return i < L.coeffs.size() ? L.coeffs[i] : Integer(0); };
  c.even_match = c.odd_match = c.odd_match_negated = true;
  for (std::size_t i = 0; i < len; ++i) {
    const Integer a = coeff(computed, i), b = coeff(reference, i);
    if (a != b) c.differing.push_back(static_cast<unsigned>(i));
    if (i % 2 == 0) {
      c.even_match = c.even_match && a == b;
    } else {
      c.odd_match = c.odd_match && a == b;
      c.odd_match_negated = c.odd_match_negated && a == -b;
    }
  }
  c.exact = c.even_match && c.odd_match;
  return c;
}

std::string LPolyComparison::report() const {
  if (exact) return "match";
  std::string degrees;
  for (auto d : differing) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
  if (even_match && odd_match_negated)
    return "even-degree coefficients match; odd-degree coefficients have opposite sign (reference equals L(-T)); "
           "differing degrees: " + degrees;
  return "mismatch at degrees: " + degrees;
}

}  // namespace aszeta
