#include "aszeta/quadratic_form.hpp"

#include <utility>

#include "aszeta/errors.hpp"

namespace aszeta {

TraceFormSpec TraceFormSpec::power_form(PrimeModulus p, unsigned n, unsigned k, Residue target) {
  return TraceFormSpec{p, n, {QuadraticTerm{k, 0, 1}}, {}, static_cast<Residue>(target % p.value())};
}

Residue evaluate(const TraceFormSpec& spec, const FieldElement& x) {
  const FieldTower& tower = x.tower();
  if (!(tower.prime() == spec.p) || tower.degree() != spec.n) throw BadInput("element does not live in F_{p^n} of the form");
  FieldElement f = tower.zero();
  for (const auto& t : spec.quadratic) f = f + (x.frobenius(t.i) * x.frobenius(t.j)).scaled(t.c);
  for (const auto& t : spec.linear) f = f + x.frobenius(t.i).scaled(t.c);
  return abs_trace(f);
}

SymmetricInvariants symmetric_invariants(std::vector<Residue> a, unsigned n, PrimeModulus prime) {
  const std::uint32_t p = prime;
  auto at = [&](unsigned i, unsigned j) -> Residue& { return a[i * n + j]; };
  auto add_multiple = [&](unsigned dst, unsigned src, std::uint64_t f) {
    // row_dst += f row_src, then col_dst += f col_src
    for (unsigned c = 0; c < n; ++c) at(dst, c) = static_cast<Residue>((at(dst, c) + f * at(src, c)) % p);
    for (unsigned r = 0; r < n; ++r) at(r, dst) = static_cast<Residue>((at(r, dst) + f * at(r, src)) % p);
  };
  auto swap_index = [&](unsigned i, unsigned j) {
    if (i == j) return;
    for (unsigned c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
    for (unsigned r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
  };

  unsigned rank = 0;
  std::uint64_t disc = 1;
  for (unsigned r = 0; r < n; ++r) {
    unsigned pivot = n;
    for (unsigned i = r; i < n && pivot == n; ++i)
      if (at(i, i) != 0) pivot = i;
    if (pivot == n) {
      // Zero diagonal: a nonzero a_ij gives a_ii + 2a_ij + a_jj = 2a_ij ≠ 0 after row_i += row_j.
      for (unsigned i = r; i < n && pivot == n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
          if (at(i, j) != 0) {
            add_multiple(i, j, 1);
            pivot = i;
            break;
          }
    }
    if (pivot == n) break;
    swap_index(r, pivot);
    const Residue d = at(r, r);
    const std::uint64_t inv = mod_inverse(d, p);
    for (unsigned j = r + 1; j < n; ++j) {
      if (at(j, r) == 0) continue;
      const std::uint64_t f = (p - std::uint64_t{at(j, r)} * inv % p) % p;
      add_multiple(j, r, f);
    }
    ++rank;
    disc = disc * d % p;
  }
  return {rank, static_cast<Residue>(disc)};
}

GramData gram(const TraceFormSpec& spec) { return gram(spec, build_tower(spec.p, spec.n)); }

GramData gram(const TraceFormSpec& spec, const FieldTower& tower) {
  if (!(tower.prime() == spec.p) || tower.degree() != spec.n) throw BadInput("tower does not match the form");
  const unsigned n = spec.n;
  const std::uint32_t p = spec.p;

  // Column u of the Frobenius-power map is (x^u)^(p^i); the basis images are
  // shared by all n^2 polarization evaluations.
  struct TermMaps {
    LinearMap fi, fj;
    Residue c;
  };
  std::vector<TermMaps> terms;
  for (const auto& t : spec.quadratic)
    terms.push_back({tower.frobenius_power_map(t.i), tower.frobenius_power_map(t.j), static_cast<Residue>(t.c % p)});

  std::vector<Residue> si(n), sj(n), prod(n);
  std::vector<std::uint64_t> scratch(2 * n);
  auto q_of_pair = [&](unsigned u, unsigned v, bool same) {
    std::uint64_t acc = 0;
    for (const auto& t : terms) {
      for (unsigned r = 0; r < n; ++r) {
        si[r] = same ? t.fi.at(r, u) : (t.fi.at(r, u) + t.fi.at(r, v)) % p;
        sj[r] = same ? t.fj.at(r, u) : (t.fj.at(r, u) + t.fj.at(r, v)) % p;
      }
      tower.mul(si, sj, prod, scratch);
      acc += std::uint64_t{t.c} * tower.abs_trace(prod);
    }
    return static_cast<Residue>(acc % p);
  };

  std::vector<Residue> diag(n);
  for (unsigned u = 0; u < n; ++u) diag[u] = q_of_pair(u, u, true);

  GramData g{spec.p, n, std::vector<Residue>(std::size_t{n} * n, 0), 0, 0, std::nullopt, 1};
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u; v < n; ++v) {
      // B(b_u, b_v) = Q(b_u + b_v) - Q(b_u) - Q(b_v); for u = v this is 2 Q(b_u).
      const Residue quv = u == v ? static_cast<Residue>(4ull * diag[u] % p) : q_of_pair(u, v, false);
      const Residue b = static_cast<Residue>((quv + 2ull * p - diag[u] - diag[v]) % p);
      g.matrix[u * n + v] = g.matrix[v * n + u] = b;
    }

  const std::uint64_t half = mod_inverse(2, p);
  std::vector<Residue> a(g.matrix.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<Residue>(g.matrix[i] * half % p);
  const auto inv = symmetric_invariants(std::move(a), n, spec.p);
  g.rank = inv.rank;
  g.radical_dim = n - inv.rank;
  g.discriminant = inv.discriminant;
  if (g.rank % 2 == 0) {
    const std::int64_t s = (g.rank / 2) % 2 == 0 ? 1 : -1;
    g.sign = legendre(s * static_cast<std::int64_t>(g.discriminant), spec.p);
  }
  return g;
}

Integer count_zeros(const GramData& g) {
  const std::uint32_t p = g.p;
  const Integer base = ipow(p, g.n - 1);
  if (g.rank % 2 == 1) return base;
  return base + *g.sign * Integer(p - 1) * ipow(p, (g.n - 2 + g.radical_dim) / 2);
}

Integer count_zeros(const TraceFormSpec& spec) {
  if (spec.target % spec.p.value() != 0) throw BadInput("count_zeros needs target 0; use count_value");
  if (!spec.linear.empty()) throw BadInput("count_zeros needs a purely quadratic form");
  return count_zeros(gram(spec));
}

Integer count_value(const GramData& g, Residue b) {
  const std::uint32_t p = g.p;
  b %= p;
  if (b == 0) throw BadInput("count_value needs a nonzero target; use count_zeros");
  if (g.rank % 2 == 0) {
    // Nonzero values of an even-rank form are equidistributed: N_0 + (p-1) N_b = p^n.
    const Integer rest = ipow(p, g.n) - count_zeros(g);
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p - 1))
      throw InvariantViolation("p^n - N_0 is not divisible by p - 1");
    Integer r;
    mpz_divexact_ui(r.get_mpz_t(), rest.get_mpz_t(), p - 1);
    return r;
  }
  const std::int64_t s = ((g.rank - 1) / 2) % 2 == 0 ? 1 : -1;
  const int eta = legendre(s * static_cast<std::int64_t>(std::uint64_t{b} * g.discriminant % p), g.p);
  return ipow(p, g.n - 1) + eta * ipow(p, (g.n + g.radical_dim - 1) / 2);
}

Integer count_value(const TraceFormSpec& spec) {
  if (!spec.linear.empty()) throw BadInput("count_value needs a purely quadratic form");
  return count_value(gram(spec), spec.target);
}

TraceFormSpec affine_reduce(const CurveSpec& spec, unsigned n) {
  if (spec.family != Family::C && spec.family != Family::C0)
    throw BadInput("affine_reduce applies to C0 and C_{k,a} only");
  spec.check();
  const std::uint32_t p = spec.p;
  const unsigned k = spec.family == Family::C ? spec.k : 0;
  const std::uint64_t a = spec.family == Family::C ? spec.a : 1;
  const std::uint64_t b = std::uint64_t{n % p} * (a * a % p) % p * mod_inverse(4 % p, p) % p;
  return TraceFormSpec::power_form(spec.p, n, k, static_cast<Residue>(b));
}

Integer count_points_rank(const CurveSpec& spec, unsigned n) {
  if (n < 1) throw BadInput("extension degree must be at least 1");
  spec.check();
  const std::uint32_t p = spec.p;
  Integer zeros;
  switch (spec.family) {
    case Family::B0: zeros = count_zeros(TraceFormSpec::power_form(spec.p, n, 0)); break;
    case Family::B: zeros = count_zeros(TraceFormSpec::power_form(spec.p, n, spec.k)); break;
    case Family::C0:
    case Family::C: {
      const TraceFormSpec f = affine_reduce(spec, n);
      const GramData g = gram(f);
      zeros = f.target == 0 ? count_zeros(g) : count_value(g, f.target);
      break;
    }
  }
  return zeros * p + 1;
}

}  // namespace aszeta
