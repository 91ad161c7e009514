#include "aszeta/curves.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "aszeta/errors.hpp"

namespace aszeta {

std::string family_name(Family f) {
  switch (f) {
    case Family::B0: return "B0";
    case Family::C0: return "C0";
    case Family::B: return "B";
    case Family::C: return "C";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "B0") return Family::B0;
  if (s == "C0") return Family::C0;
  if (s == "B" || s == "Bk") return Family::B;
  if (s == "C" || s == "Ck") return Family::C;
  throw BadInput("unknown family '" + s + "' (expected B0, C0, B or C)");
}

CurveSpec CurveSpec::b0(std::uint64_t p) { return CurveSpec{Family::B0, PrimeModulus(p), 0, 1}; }
CurveSpec CurveSpec::c0(std::uint64_t p) { return CurveSpec{Family::C0, PrimeModulus(p), 0, 1}; }

CurveSpec CurveSpec::bk(std::uint64_t p, unsigned k) {
  CurveSpec s{Family::B, PrimeModulus(p), k, 1};
  s.check();
  return s;
}

CurveSpec CurveSpec::ck(std::uint64_t p, unsigned k, Residue a) {
  CurveSpec s{Family::C, PrimeModulus(p), k, a};
  s.check();
  return s;
}

void CurveSpec::check() const {
  if ((family == Family::B || family == Family::C) && k < 1) throw BadInput("k must be at least 1 for B and C");
  if (family == Family::C && (a == 0 || a >= p.value())) throw BadInput("a must lie in 1..p-1");
}

std::string CurveSpec::label() const {
  const std::string ps = "^(" + std::to_string(p.value()) + ")";
  switch (family) {
    case Family::B0: return "B_0" + ps;
    case Family::C0: return "C_0" + ps;
    case Family::B: return "B_" + std::to_string(k) + ps;
    case Family::C:
      if (a == 1) return "C_" + std::to_string(k) + ps;
      return "C_{" + std::to_string(k) + ",a=" + std::to_string(a) + "}" + ps;
  }
  return "?";
}

Integer genus(const CurveSpec& spec) {
  const std::uint32_t p = spec.p;
  Integer half = (p - 1) / 2;
  if (spec.family == Family::B0 || spec.family == Family::C0) return half;
  return ipow(p, spec.k) * half;
}

FieldElement rhs_eval(const CurveSpec& spec, const FieldElement& x) {
  if (!(x.tower().prime() == spec.p)) throw BadInput("field element lives over a different prime than the curve");
  switch (spec.family) {
    case Family::B0: return x * x;
    case Family::C0: return x * x + x;
    case Family::B: return x.frobenius(spec.k) * x;
    case Family::C: return x.frobenius(spec.k) * x + x.scaled(spec.a);
  }
  throw BadInput("unknown family");
}

bool satisfies_point_count_invariants(const PointCount& pc) {
  const std::uint32_t p = pc.spec.p;
  if (mpz_fdiv_ui(pc.count.get_mpz_t(), p) != 1 % p) return false;
  const Integer q = ipow(p, pc.n);
  const Integer diff = pc.count - q - 1;
  const Integer g = genus(pc.spec);
  return diff * diff <= 4 * g * g * q;
}

namespace {

std::uint64_t field_size(std::uint32_t p, unsigned n, std::uint64_t budget) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > budget / p) throw BudgetExceeded("p^n exceeds the enumeration budget of " + std::to_string(budget));
    q *= p;
  }
  if (q > budget) throw BudgetExceeded("p^n exceeds the enumeration budget of " + std::to_string(budget));
  return q;
}

// Walks x through F_{p^n} in odometer order, maintaining y = x^(p^k)
// incrementally: every digit touched by an increment moves by +1 mod p,
// so y moves by the matching column of the Frobenius-power matrix.
class Walker {
 public:
  Walker(const CurveSpec& spec, const FieldTower& tower)
      : spec_(spec), tower_(tower), n_(tower.degree()), p_(tower.p()), x_(n_), y_(n_), f_(n_), scratch_(2 * n_) {
    if (spec.family == Family::B || spec.family == Family::C) {
      frob_ = tower.frobenius_power_map(spec.k);
      use_frob_ = true;
    }
  }

  void seek(std::uint64_t index) {
    for (unsigned i = 0; i < n_; ++i) {
      x_[i] = static_cast<Residue>(index % p_);
      index /= p_;
    }
    if (use_frob_) frob_.apply(x_, y_);
  }

  bool trace_is_zero() {
    switch (spec_.family) {
      case Family::B0:
        tower_.mul(x_, x_, f_, scratch_);
        break;
      case Family::C0:
        tower_.mul(x_, x_, f_, scratch_);
        for (unsigned i = 0; i < n_; ++i) f_[i] = (f_[i] + x_[i]) % p_;
        break;
      case Family::B:
        tower_.mul(y_, x_, f_, scratch_);
        break;
      case Family::C:
        tower_.mul(y_, x_, f_, scratch_);
        for (unsigned i = 0; i < n_; ++i)
          f_[i] = static_cast<Residue>((f_[i] + std::uint64_t{spec_.a} * x_[i]) % p_);
        break;
    }
    return tower_.abs_trace(f_) == 0;
  }

  void advance() {
    for (unsigned i = 0; i < n_; ++i) {
      x_[i] = x_[i] + 1 == p_ ? 0 : x_[i] + 1;
      if (use_frob_)
        for (unsigned r = 0; r < n_; ++r) {
          const Residue v = y_[r] + frob_.at(r, i);
          y_[r] = v >= p_ ? v - p_ : v;
        }
      if (x_[i] != 0) break;
    }
  }

 private:
  const CurveSpec& spec_;
  const FieldTower& tower_;
  unsigned n_;
  std::uint32_t p_;
  LinearMap frob_;
  bool use_frob_ = false;
  std::vector<Residue> x_, y_, f_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace

std::uint64_t count_trace_zeros_serial(const CurveSpec& spec, const FieldTower& tower, std::uint64_t first,
                                       std::uint64_t last) {
  if (!(tower.prime() == spec.p)) throw BadInput("tower and curve use different primes");
  if (first >= last) return 0;
  Walker w(spec, tower);
  w.seek(first);
  std::uint64_t zeros = 0;
  for (std::uint64_t i = first; i < last; ++i) {
    zeros += w.trace_is_zero();
    w.advance();
  }
  return zeros;
}

std::uint64_t count_trace_zeros_parallel(const CurveSpec& spec, const FieldTower& tower, std::uint64_t first,
                                         std::uint64_t last, int jobs) {
  if (!(tower.prime() == spec.p)) throw BadInput("tower and curve use different primes");
  if (first >= last) return 0;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const std::uint64_t total = last - first;
  const auto blocks = static_cast<std::int64_t>(std::min<std::uint64_t>(total, std::uint64_t(threads) * 8));
  std::uint64_t zeros = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : zeros) num_threads(threads)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = first + total * b / blocks;
    const std::uint64_t hi = first + total * (b + 1) / blocks;
    if (lo >= hi) continue;
    Walker w(spec, tower);
    w.seek(lo);
    std::uint64_t local = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      local += w.trace_is_zero();
      w.advance();
    }
    zeros += local;
  }
  return zeros;
}

PointCount count_points_bruteforce(const CurveSpec& spec, const FieldTower& tower, const EnumerationOptions& opts) {
  spec.check();
  const std::uint64_t q = field_size(tower.p(), tower.degree(), opts.budget);
  const std::uint64_t zeros =
      opts.jobs == 1 ? count_trace_zeros_serial(spec, tower, 0, q) : count_trace_zeros_parallel(spec, tower, 0, q, opts.jobs);
  Integer count = Integer(static_cast<unsigned long>(zeros)) * spec.p.value() + 1;
  return PointCount{spec, tower.degree(), std::move(count)};
}

PointCount count_points_bruteforce(const CurveSpec& spec, unsigned n, const EnumerationOptions& opts) {
  if (n < 1) throw BadInput("extension degree must be at least 1");
  field_size(spec.p, n, opts.budget);  // refuse before building the tower
  return count_points_bruteforce(spec, build_tower(spec.p, n), opts);
}

bool verify_a_invariance(std::uint64_t p, unsigned k, unsigned n, std::uint64_t budget) {
  const FieldTower tower = build_tower(PrimeModulus(p), n);
  EnumerationOptions opts{budget, 0};
  const Integer reference = count_points_bruteforce(CurveSpec::ck(p, k, 1), tower, opts).count;
  for (Residue a = 2; a < p; ++a)
    if (count_points_bruteforce(CurveSpec::ck(p, k, a), tower, opts).count != reference) return false;
  return true;
}

}  // namespace aszeta
