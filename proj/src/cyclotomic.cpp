#include "aszeta/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "aszeta/errors.hpp"
#include "aszeta/finite_field.hpp"

namespace aszeta {

namespace {

// Exact quotient of integer polynomials by a monic divisor.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<Integer> quo(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    const Integer c = num[i];
    quo[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw InvariantViolation("cyclotomic division left a remainder");
  return quo;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  if (m < 1) throw BadInput("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::vector<Integer>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  // x^m - 1 = Π_{d | m} Φ_d
  std::vector<Integer> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) num = divide_monic(std::move(num), cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  memo.emplace(m, num);
  return num;
}

CyclotomicRing::CyclotomicRing(unsigned m) : m_(m), phi_(cyclotomic_polynomial(m)) {}

CyclotomicRing::Element CyclotomicRing::constant(const Integer& c) const {
  Element e(m_);
  e[0] = c;
  return e;
}

CyclotomicRing::Element CyclotomicRing::root(std::int64_t e) const {
  Element r(m_);
  r[index(e)] = 1;
  return r;
}

void CyclotomicRing::add_rotated(Element& dst, const Element& src, std::int64_t shift, const Integer& factor) const {
  const unsigned s = index(shift);
  for (unsigned i = 0; i < m_; ++i) {
    if (src[i] == 0) continue;
    const unsigned j = i + s >= m_ ? i + s - m_ : i + s;
    mpz_addmul(dst[j].get_mpz_t(), src[i].get_mpz_t(), factor.get_mpz_t());
  }
}

CyclotomicRing::Element CyclotomicRing::multiply(const Element& a, const Element& b) const {
  Element r(m_);
  for (unsigned i = 0; i < m_; ++i)
    if (a[i] != 0) add_rotated(r, b, i, a[i]);
  return r;
}

std::vector<Integer> CyclotomicRing::reduce(const Element& a) const {
  std::vector<Integer> r(a.begin(), a.end());
  const std::size_t d = phi_.size() - 1;
  for (std::size_t i = r.size(); i-- > d;) {
    if (r[i] == 0) continue;
    const Integer c = r[i];
    for (std::size_t j = 0; j <= d; ++j) mpz_submul(r[i - d + j].get_mpz_t(), c.get_mpz_t(), phi_[j].get_mpz_t());
  }
  r.resize(d);
  return r;
}

bool CyclotomicRing::equal(const Element& a, const Element& b) const {
  Element diff(m_);
  for (unsigned i = 0; i < m_; ++i) diff[i] = a[i] - b[i];
  for (const auto& c : reduce(diff))
    if (c != 0) return false;
  return true;
}

std::optional<Integer> CyclotomicRing::as_integer(const Element& a) const {
  const auto r = reduce(a);
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return r.empty() ? Integer(0) : r[0];
}

CyclotomicRing::Element CyclotomicRing::sqrt_p(std::uint32_t p) const {
  if (m_ % (4 * p) != 0) throw BadInput("sqrt(p) needs 4p | m");
  const PrimeModulus prime(p);
  Element gauss(m_);
  const unsigned step = m_ / p;
  for (unsigned t = 1; t < p; ++t) gauss[t * step] = legendre(t, prime);
  if (p % 4 == 1) return gauss;
  // g = i√p, so √p = -i g = ζ^(3m/4) g.
  Element r(m_);
  add_rotated(r, gauss, 3 * (m_ / 4), 1);
  return r;
}

}  // namespace aszeta
