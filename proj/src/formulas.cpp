#include "aszeta/formulas.hpp"

#include <numeric>

#include "aszeta/errors.hpp"

namespace aszeta {

namespace {

// (-1)^(n(p-1)/4) for even n.
int sign_quarter(std::uint32_t p, std::uint64_t n) {
  const std::uint64_t e = (n / 2) * ((p - 1) / 2);
  return e % 2 == 0 ? 1 : -1;
}

// ((-1)^((n-1)/2) n / p) for odd n.
int twisted_symbol(std::uint32_t p, std::uint64_t n) {
  const auto r = static_cast<std::int64_t>(n % p);
  return legendre(((n - 1) / 2) % 2 == 0 ? r : -r, PrimeModulus(p));
}

void require_n(std::uint64_t n) {
  if (n < 1) throw BadInput("extension degree n must be at least 1");
}

}  // namespace

std::string to_string(const Deficit& d) {
  if (d.v == 0) return d.u.get_str();
  if (d.u == 0) return d.v.get_str() + "*sqrt(p)";
  return d.u.get_str() + (d.v < 0 ? " - " : " + ") + Integer(abs(d.v)).get_str() + "*sqrt(p)";
}

bool deficit_within(const Deficit& d, std::uint32_t p, const Integer& bound) {
  if (d.u != 0 && d.v != 0) throw InvariantViolation("deficit has both an integer and a sqrt(p) part");
  if (d.v == 0) return abs(d.u) <= bound;
  return d.v * d.v * p <= bound * bound;
}

FormulaCase formula_case_B0(std::uint32_t p, std::uint64_t n) {
  require_n(n);
  const Integer pm1 = p - 1;
  if (p % 4 == 1) {
    if (n % 2) return {std::gcd<std::uint64_t>(n, 2), "n odd", Deficit{}};
    return {2, "n even", Deficit::integer(pm1)};
  }
  const std::uint64_t d = std::gcd<std::uint64_t>(n, 4);
  if (d == 1) return {d, "(4,n)=1", Deficit{}};
  if (d == 2) return {d, "(4,n)=2", Deficit::integer(-pm1)};
  return {d, "(4,n)=4", Deficit::integer(pm1)};
}

FormulaCase formula_case_C0(std::uint32_t p, std::uint64_t n) {
  require_n(n);
  const Integer pm1 = p - 1;
  if (p % 4 == 1) {
    const std::uint64_t d = std::gcd<std::uint64_t>(n, 2ull * p);
    if (d == 1) return {d, "(n,2p)=1", Deficit::sqrt_p(-legendre(static_cast<std::int64_t>(n % p), PrimeModulus(p)))};
    if (d == 2) return {d, "(n,2p)=2", Deficit::integer(-1)};
    if (d == p) return {d, "(n,2p)=p", Deficit{}};
    return {d, "(n,2p)=2p", Deficit::integer(pm1)};
  }
  const std::uint64_t d = std::gcd<std::uint64_t>(n, 4ull * p);
  if (d == 1) return {d, "(n,4p)=1", Deficit::sqrt_p(-twisted_symbol(p, n))};
  if (d == 2) return {d, "(n,4p)=2", Deficit::integer(1)};
  if (d == 4) return {d, "(n,4p)=4", Deficit::integer(-1)};
  if (d == p) return {d, "(n,4p)=p", Deficit{}};
  if (d == 2ull * p) return {d, "(n,4p)=2p", Deficit::integer(-pm1)};
  return {d, "(n,4p)=4p", Deficit::integer(pm1)};
}

FormulaCase formula_case_Bk(std::uint32_t p, std::uint64_t k, std::uint64_t n) {
  require_n(n);
  if (k < 1) throw BadInput("k must be at least 1");
  const Integer pm1 = p - 1;
  const std::uint64_t d = std::gcd(n, 4 * k);
  if (k % d == 0 && d % 2 == 1) return {d, "d|k, d odd", Deficit{}};
  if (k % d == 0) return {d, "d|k, d even", Deficit::integer(pm1 * sign_quarter(p, n))};
  if (k % (d / 2) == 0) return {d, "d∤k, d/2|k", Deficit::integer(pm1)};
  return {d, "d∤2k, d|4k", Deficit::integer(pm1 * ipow(p, std::gcd(k, n)))};
}

std::uint64_t ck_level(std::uint32_t p, std::uint64_t k) { return k % p == 0 ? k : k * p; }

FormulaCase formula_case_Ck(std::uint32_t p, std::uint64_t k, std::uint64_t n) {
  require_n(n);
  if (k < 1) throw BadInput("k must be at least 1");
  const Integer pm1 = p - 1;
  const std::uint64_t l = ck_level(p, k);
  const std::uint64_t d = std::gcd(n, 4 * l);
  const bool p_div_n = n % p == 0;
  if (l % d == 0) {
    if (n % 2 == 1) {
      if (!p_div_n) return {d, "d|l, n odd, p∤n", Deficit::sqrt_p(-twisted_symbol(p, n))};
      return {d, "d|l, n odd, p|n", Deficit{}};
    }
    const int s = sign_quarter(p, n);
    if (!p_div_n) return {d, "d|l, n even, p∤n", Deficit::integer(-s)};
    return {d, "d|l, n even, p|n", Deficit::integer(pm1 * s)};
  }
  if (l % (d / 2) == 0) {
    if (!p_div_n) return {d, "d∤l, d/2|l, p∤n", Deficit::integer(-1)};
    return {d, "d∤l, d/2|l, p|n", Deficit::integer(pm1)};
  }
  const Integer pk = ipow(p, std::gcd(k, n));
  if (!p_div_n) return {d, "d∤2l, d|4l, p∤n", Deficit::integer(-pk)};
  return {d, "d∤2l, d|4l, p|n", Deficit::integer(pm1 * pk)};
}

FormulaCase formula_case(const CurveSpec& spec, std::uint64_t n) {
  spec.check();
  switch (spec.family) {
    case Family::B0: return formula_case_B0(spec.p, n);
    case Family::C0: return formula_case_C0(spec.p, n);
    case Family::B: return formula_case_Bk(spec.p, spec.k, n);
    case Family::C: return formula_case_Ck(spec.p, spec.k, n);
  }
  throw BadInput("unknown family");
}

Deficit deficit_B0(std::uint32_t p, std::uint64_t n) { return formula_case_B0(p, n).deficit; }
Deficit deficit_C0(std::uint32_t p, std::uint64_t n) { return formula_case_C0(p, n).deficit; }
Deficit deficit_Bk(std::uint32_t p, std::uint64_t k, std::uint64_t n) { return formula_case_Bk(p, k, n).deficit; }
Deficit deficit_Ck(std::uint32_t p, std::uint64_t k, std::uint64_t n) { return formula_case_Ck(p, k, n).deficit; }
Deficit deficit(const CurveSpec& spec, std::uint64_t n) { return formula_case(spec, n).deficit; }

Deficit reduce_supersingular(const std::map<std::uint64_t, Deficit>& base, std::uint64_t s, std::uint64_t n,
                             PrimeModulus p) {
  if (n < 1) throw BadInput("n must be positive");
  if (s < 1 || s % 2 != 0) throw BadInput("period bound s must be a positive even integer");
  const std::uint64_t m = std::gcd(n, s);
  const std::uint64_t t = n / m;
  const auto it = base.find(m);
  if (it == base.end()) throw BadInput("base values do not cover divisor " + std::to_string(m) + " of s");
  if (m % 2 == 0 || t % p == 0) return it->second;
  return it->second * twisted_symbol(p, t);
}

Integer count_from_deficit(const Deficit& d, std::uint32_t p, std::uint64_t n) {
  const Integer q = ipow(p, n);
  if (n % 2 == 0) {
    if (d.v != 0) throw InvariantViolation("sqrt(p) part in an even-level deficit");
    return q + 1 - ipow(p, n / 2) * d.u;
  }
  if (d.u != 0) throw InvariantViolation("integer part in an odd-level deficit");
  return q + 1 - ipow(p, (n + 1) / 2) * d.v;
}

Deficit deficit_from_count(const Integer& count, std::uint32_t p, std::uint64_t n) {
  const Integer diff = ipow(p, n) + 1 - count;
  const Integer scale = ipow(p, n % 2 == 0 ? n / 2 : (n + 1) / 2);
  if (!mpz_divisible_p(diff.get_mpz_t(), scale.get_mpz_t()))
    throw InvariantViolation("count is not of supersingular shape at level " + std::to_string(n));
  Integer r;
  mpz_divexact(r.get_mpz_t(), diff.get_mpz_t(), scale.get_mpz_t());
  return n % 2 == 0 ? Deficit::integer(r) : Deficit::sqrt_p(r);
}

bool is_minimal(std::uint32_t, std::uint64_t n, const Integer& g, const Deficit& d) {
  return n % 2 == 0 && d.v == 0 && d.u == 2 * g;
}

bool is_maximal(std::uint32_t, std::uint64_t n, const Integer& g, const Deficit& d) {
  return n % 2 == 0 && d.v == 0 && d.u == -2 * g;
}

}  // namespace aszeta
