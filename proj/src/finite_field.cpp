#include "aszeta/finite_field.hpp"

#include <algorithm>
#include <string>

#include "aszeta/errors.hpp"

namespace aszeta {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p == 2) throw BadInput("p = 2 is not supported; p must be an odd prime");
  if (!is_prime(p)) throw BadInput("p = " + std::to_string(p) + " is not prime");
  // Products of two residues and length-n sums must fit in 64 bits.
  if (p >= 65536) throw BadInput("p must be below 65536");
  p_ = static_cast<std::uint32_t>(p);
}

Residue mod_pow(Residue base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = base % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<Residue>(r);
}

Residue mod_inverse(Residue a, std::uint32_t p) {
  if (a % p == 0) throw BadInput("zero has no inverse mod p");
  return mod_pow(a, p - 2, p);
}

Residue to_residue(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

int legendre(std::int64_t a, PrimeModulus p) {
  Residue r = to_residue(a, p);
  if (r == 0) return 0;
  return mod_pow(r, (p.value() - 1) / 2, p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// poly

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Residue x = i < a.size() ? a[i] : 0;
    Residue y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Residue lead_inv = mod_inverse(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<Residue>((a[shift + i] + (p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  Poly r(acc.begin(), acc.end());
  return rem(std::move(r), m, p);
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r = rem(Poly{1}, m, p);
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mul_mod(r, base, m, p);
    e >>= 1;
    if (e) base = mul_mod(base, base, m, p);
  }
  return r;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = static_cast<Residue>(c * inv % p);
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  if (m.size() < 2) return false;
  const std::size_t n = m.size() - 1;
  const Poly x{0, 1};
  Poly h = rem(x, m, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = pow_mod(h, p, m, p);
    if (gcd(sub(h, x, p), m, p) != Poly{1}) return false;
  }
  return true;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(std::uint32_t p, std::size_t n) : p_(p), n_(n), m_(n * n, 0) {}

void LinearMap::apply(std::span<const Residue> in, std::span<Residue> out) const {
  for (std::size_t r = 0; r < n_; ++r) {
    std::uint64_t acc = 0;
    const Residue* row = &m_[r * n_];
    for (std::size_t c = 0; c < n_; ++c) acc += std::uint64_t{row[c]} * in[c];
    out[r] = static_cast<Residue>(acc % p_);
  }
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  LinearMap r(p_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < n_; ++l) acc += std::uint64_t{at(i, l)} * inner.at(l, j);
      r.at(i, j) = static_cast<Residue>(acc % p_);
    }
  return r;
}

// ---------------------------------------------------------------------------
// FieldTower

namespace {

std::vector<Residue> smallest_irreducible(std::uint32_t p, unsigned n) {
  // Candidate (c_0, ..., c_{n-1}) in lexicographic order, c_0 most significant.
  std::vector<Residue> c(n, 0);
  if (n > 1) c[0] = 1;  // c_0 = 0 means x | m
  for (;;) {
    poly::Poly m(c.begin(), c.end());
    m.push_back(1);
    if (poly::is_irreducible(m, p)) return m;
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) throw InvariantViolation("no irreducible polynomial found");
    ++c[i];
  }
}

}  // namespace

FieldTower::FieldTower(PrimeModulus p, unsigned n) {
  if (n < 1) throw BadInput("extension degree must be at least 1");
  data_ = std::make_shared<Data>(Data{p, n, smallest_irreducible(p, n), {}, {}, {}});
  init();
}

FieldTower::FieldTower(PrimeModulus p, std::vector<Residue> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) throw BadInput("modulus must be monic of degree >= 1");
  for (auto c : modulus)
    if (c >= p.value()) throw BadInput("modulus coefficients must be reduced mod p");
  if (!poly::is_irreducible(modulus, p)) throw BadInput("modulus is not irreducible");
  const auto n = static_cast<unsigned>(modulus.size() - 1);
  data_ = std::make_shared<Data>(Data{p, n, std::move(modulus), {}, {}, {}});
  init();
}

void FieldTower::init() {
  Data& d = *data_;
  const std::uint32_t p = d.p;
  const unsigned n = d.n;
  const auto& m = d.modulus;

  // x^(n+i) mod m, by multiplying the previous row by x.
  d.reduce.assign(n > 1 ? n - 1 : 0, std::vector<Residue>(n, 0));
  std::vector<Residue> cur(n);
  for (unsigned j = 0; j < n; ++j) cur[j] = (p - m[j]) % p;  // x^n = -Σ m_j x^j
  for (unsigned i = 0; i + 1 < n; ++i) {
    d.reduce[i] = cur;
    std::vector<Residue> next(n, 0);
    const std::uint64_t top = cur[n - 1];
    for (unsigned j = n - 1; j > 0; --j) next[j] = cur[j - 1];
    for (unsigned j = 0; j < n; ++j) next[j] = static_cast<Residue>((next[j] + top * ((p - m[j]) % p)) % p);
    cur = std::move(next);
  }

  // Frobenius matrix: column j = (x^j)^p = (x^p)^j.
  d.frob = LinearMap(p, n);
  const poly::Poly xp = poly::pow_mod(poly::Poly{0, 1}, p, m, p);
  poly::Poly col{1};
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned r = 0; r < col.size(); ++r) d.frob.at(r, j) = col[r];
    col = poly::mul_mod(col, xp, m, p);
  }

  d.trace.assign(n, 0);
  std::vector<Residue> e(n), f(n), sum(n);
  for (unsigned i = 0; i < n; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    std::fill(sum.begin(), sum.end(), 0);
    for (unsigned t = 0; t < n; ++t) {
      for (unsigned r = 0; r < n; ++r) sum[r] = (sum[r] + e[r]) % p;
      d.frob.apply(e, f);
      std::swap(e, f);
    }
    for (unsigned r = 1; r < n; ++r)
      if (sum[r] != 0) throw InvariantViolation("trace of a basis element left F_p");
    d.trace[i] = sum[0];
  }
}

void FieldTower::mul(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out,
                     std::span<std::uint64_t> scratch) const {
  const Data& d = *data_;
  const unsigned n = d.n;
  const std::uint32_t p = d.p;
  std::fill_n(scratch.begin(), 2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    for (unsigned j = 0; j < n; ++j) scratch[i + j] += ai * b[j];
  }
  for (unsigned i = 0; i < 2 * n - 1; ++i) scratch[i] %= p;
  for (unsigned i = 0; i + 1 < n; ++i) {
    const std::uint64_t hi = scratch[n + i];
    if (hi == 0) continue;
    const auto& row = d.reduce[i];
    for (unsigned j = 0; j < n; ++j) scratch[j] += hi * row[j];
  }
  for (unsigned j = 0; j < n; ++j) out[j] = static_cast<Residue>(scratch[j] % p);
}

void FieldTower::frobenius(std::span<const Residue> a, std::span<Residue> out, unsigned power) const {
  const unsigned n = data_->n;
  power %= n;
  std::vector<Residue> cur(a.begin(), a.begin() + n), next(n);
  for (unsigned i = 0; i < power; ++i) {
    data_->frob.apply(cur, next);
    std::swap(cur, next);
  }
  std::copy(cur.begin(), cur.end(), out.begin());
}

LinearMap FieldTower::frobenius_power_map(unsigned power) const {
  const unsigned n = data_->n;
  LinearMap r(p(), n);
  for (unsigned i = 0; i < n; ++i) r.at(i, i) = 1;
  for (unsigned i = 0; i < power % n; ++i) r = data_->frob.compose(r);
  return r;
}

Residue FieldTower::abs_trace(std::span<const Residue> a) const {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < data_->n; ++i) acc += std::uint64_t{a[i]} * data_->trace[i];
  return static_cast<Residue>(acc % data_->p);
}

FieldElement FieldTower::zero() const { return FieldElement(*this, std::vector<Residue>(degree(), 0)); }

FieldElement FieldTower::one() const { return constant(1); }

FieldElement FieldTower::constant(Residue c) const {
  std::vector<Residue> v(degree(), 0);
  v[0] = c % p();
  return FieldElement(*this, std::move(v));
}

FieldElement FieldTower::generator() const {
  std::vector<Residue> v(degree(), 0);
  if (degree() == 1)
    v[0] = (p() - modulus()[0]) % p();
  else
    v[1] = 1;
  return FieldElement(*this, std::move(v));
}

FieldElement FieldTower::element(std::vector<Residue> coeffs) const { return FieldElement(*this, std::move(coeffs)); }

FieldElement FieldTower::from_index(std::uint64_t index) const {
  std::vector<Residue> v(degree(), 0);
  for (unsigned i = 0; i < degree() && index; ++i) {
    v[i] = static_cast<Residue>(index % p());
    index /= p();
  }
  return FieldElement(*this, std::move(v));
}

FieldTower build_tower(PrimeModulus p, unsigned n) { return FieldTower(p, n); }

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldTower tower, std::vector<Residue> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != tower_.degree()) throw BadInput("coefficient vector length must equal the extension degree");
  for (auto& c : coeffs_) c %= tower_.p();
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

bool FieldElement::in_prime_field() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Residue c) { return c == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  std::vector<Residue> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeffs_[i] + o.coeffs_[i]) % tower_.p();
  return FieldElement(tower_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  std::vector<Residue> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeffs_[i] + tower_.p() - o.coeffs_[i]) % tower_.p();
  return FieldElement(tower_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (!(tower_ == o.tower_)) throw BadInput("elements belong to different towers");
  std::vector<Residue> r(coeffs_.size());
  std::vector<std::uint64_t> scratch(2 * coeffs_.size());
  tower_.mul(coeffs_, o.coeffs_, r, scratch);
  return FieldElement(tower_, std::move(r));
}

FieldElement FieldElement::scaled(Residue c) const {
  std::vector<Residue> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Residue>(std::uint64_t{coeffs_[i]} * c % tower_.p());
  return FieldElement(tower_, std::move(r));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r = tower_.one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FieldElement FieldElement::frobenius(unsigned power) const {
  std::vector<Residue> r(coeffs_.size());
  tower_.frobenius(coeffs_, r, power);
  return FieldElement(tower_, std::move(r));
}

Residue abs_trace(const FieldElement& e) { return e.tower().abs_trace(e.coeffs()); }

FieldElement rel_trace(const FieldElement& e, unsigned d) {
  const unsigned n = e.tower().degree();
  if (d == 0 || n % d != 0) throw BadInput("relative trace degree must divide the extension degree");
  FieldElement sum = e.tower().zero(), term = e;
  for (unsigned i = 0; i < n / d; ++i) {
    sum = sum + term;
    term = term.frobenius(d);
  }
  return sum;
}

Residue subfield_trace(const FieldElement& e, unsigned d) {
  const unsigned n = e.tower().degree();
  if (d == 0 || n % d != 0) throw BadInput("subfield degree must divide the extension degree");
  FieldElement sum = e.tower().zero(), term = e;
  for (unsigned i = 0; i < d; ++i) {
    sum = sum + term;
    term = term.frobenius();
  }
  if (!sum.in_prime_field()) throw InvariantViolation("subfield trace did not land in F_p");
  return sum.coeffs()[0];
}

}  // namespace aszeta
