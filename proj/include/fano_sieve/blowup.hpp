#pragma once

// Exact intersection theory on the Kawamata blowup f : Y -> X of one
// terminal quotient point 1/r(1,a,r-a), local vanishing orders, certified
// section counting, and centre computation for monomial pencils.
//
// Conventions: A = -K_X, B = -K_Y = f*A - (1/r)E, and the exceptional E has
// discrepancy 1/r. On the basis {B, E}:
//   B^3 = A^3 - 1/(r a (r-a)),   B^2 E = 1/(a(r-a)),
//   B E^2 = -r/(a(r-a)),         E^3 = r^2/(a(r-a)).

#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano_sieve/catalog.hpp"
#include "fano_sieve/rational.hpp"
#include "fano_sieve/singularities.hpp"
#include "fano_sieve/wps.hpp"

namespace fano {

struct BlowupContext {
  FamilyRecord family;
  QuotientSingularity sing;
  Rational A3, B3, B2E, BE2, E3;
};

inline BlowupContext blowup_context(const FamilyRecord& f,
                                    const QuotientSingularity& s) {
  BlowupContext ctx;
  ctx.family = f;
  ctx.sing = s;
  const long long r = s.r, a = s.a;
  ctx.A3 = anticanonical_cube(f);
  ctx.B3 = ctx.A3 - Rational(1, r * a * (r - a));
  ctx.B2E = Rational(1, a * (r - a));
  ctx.BE2 = Rational(-r, a * (r - a));
  ctx.E3 = Rational(r * r, a * (r - a));
  // (A - E/r)^3 with the mixed A.E terms zero must reproduce B^3
  assert(ctx.B3 == ctx.A3 - ctx.E3 / (Rational(r) * r * r));
  assert(ctx.B2E == ctx.E3 / (Rational(r) * r));
  assert(ctx.BE2 == -ctx.E3 / Rational(r));
  return ctx;
}

// Divisor class bB + cE on Y.
struct DivisorClassY {
  long long b = 0;
  long long c = 0;
  bool operator==(const DivisorClassY&) const = default;
};

inline std::string format_class(const DivisorClassY& d) {
  std::string s = (d.b == 1) ? "B" : std::to_string(d.b) + "B";
  if (d.c == 1) s += " + E";
  else if (d.c > 1) s += " + " + std::to_string(d.c) + "E";
  else if (d.c < 0) s += " - " + std::to_string(-d.c) + "E";
  return s;
}

// Trilinear expansion of D1.D2.D3 over the basis {B, E}.
inline Rational triple_product(const BlowupContext& ctx, const DivisorClassY& d1,
                               const DivisorClassY& d2, const DivisorClassY& d3) {
  const Rational b1 = d1.b, c1 = d1.c, b2 = d2.b, c2 = d2.c, b3 = d3.b, c3 = d3.c;
  return b1 * b2 * b3 * ctx.B3 +
         (b1 * b2 * c3 + b1 * c2 * b3 + c1 * b2 * b3) * ctx.B2E +
         (b1 * c2 * c3 + c1 * b2 * c3 + c1 * c2 * b3) * ctx.BE2 +
         c1 * c2 * c3 * ctx.E3;
}

enum class VarRole { Transverse, Unit, Dependent };

// Local picture at the singular point: three transverse variables carry the
// local weights {1/r, a/r, (r-a)/r}; one variable is a unit (nonzero at the
// point); one is locally dependent via the hypersurface equation and is
// excluded from order computations.
struct LocalChart {
  int r = 0;
  std::array<VarRole, 5> role{};
  std::array<Rational, 5> local_weight{};
  Rational discrepancy;  // a_E = 1/r
};

inline LocalChart local_chart(const FamilyRecord& f,
                              const QuotientSingularity& s) {
  LocalChart ch;
  ch.r = s.r;
  ch.discrepancy = Rational(1, s.r);
  int unit_var, dep_var;
  if (s.location.kind == Location::Kind::Vertex) {
    const int i = s.location.i;
    const auto j = detail::tangent_partner(f.w, f.d, i);
    if (!j) throw NoTangentMonomial("vertex " + std::to_string(i));
    unit_var = i;   // the vertex coordinate is nonzero at the point
    dep_var = *j;   // tangent-monomial partner
  } else {
    const int i = s.location.i, j = s.location.j;
    // on a stratum the higher-weight coordinate is the dependent one
    dep_var = (f.w[j] >= f.w[i]) ? j : i;
    unit_var = (dep_var == j) ? i : j;
  }
  const auto nq = normalize_quotient(
      s.r, {f.w[s.transverse_vars[0]], f.w[s.transverse_vars[1]],
            f.w[s.transverse_vars[2]]});
  if (!nq) throw Error("local chart of a non-terminal point");
  for (int v = 0; v < 5; ++v) ch.role[v] = VarRole::Transverse;
  ch.role[unit_var] = VarRole::Unit;
  ch.role[dep_var] = VarRole::Dependent;
  for (int v : s.transverse_vars)
    ch.local_weight[v] = Rational((nq->unit * f.w[v]) % s.r, s.r);
  return ch;
}

// Vanishing order along E of the proper transform of {m = 0}. Monomials
// through the dependent variable are excluded (nullopt): substituting the
// equation could only raise the order, so every section list below is a
// certified lower bound.
inline std::optional<Rational> vanishing_order(const LocalChart& ch,
                                               const Monomial& m) {
  Rational o = 0;
  for (int v = 0; v < 5; ++v) {
    if (m[v] == 0) continue;
    if (ch.role[v] == VarRole::Dependent) return std::nullopt;
    if (ch.role[v] == VarRole::Transverse) o += ch.local_weight[v] * m[v];
  }
  return o;
}

// Certified monomial sections of bB + cE: monomials of degree b whose order
// along E is at least (b - rc)/r.
inline std::vector<Monomial> sections(const FamilyRecord& f,
                                      const QuotientSingularity& s,
                                      const DivisorClassY& d) {
  assert(d.b >= 1);
  const LocalChart ch = local_chart(f, s);
  const Rational threshold = Rational(d.b - static_cast<long long>(s.r) * d.c, s.r);
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(f.w, d.b)) {
    const auto o = vanishing_order(ch, m);
    if (o && *o >= threshold) out.push_back(m);
  }
  return out;
}

namespace detail {

inline bool in_span(const Monomial& m, const std::vector<Monomial>& gens,
                    std::map<Monomial, bool>& memo) {
  if (m.is_constant()) return true;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  bool res = false;
  for (const Monomial& g : gens) {
    if (g.is_constant() || !g.divides(m)) continue;
    Monomial rest;
    for (int i = 0; i < 5; ++i) rest.e[i] = m.e[i] - g.e[i];
    if (in_span(rest, gens, memo)) {
      res = true;
      break;
    }
  }
  memo[m] = res;
  return res;
}

}  // namespace detail

struct RingCheck {
  bool ok = true;
  std::optional<Monomial> counterexample;
  long long degree = 0;  // degree of the counterexample
};

// True iff for every n <= N each certified section of nB is a product of the
// given generators. Verifies R(Y,B) against k[gens] up to degree N.
inline RingCheck verify_ring_generators(const FamilyRecord& f,
                                        const QuotientSingularity& s,
                                        const std::vector<Monomial>& gens,
                                        long long N) {
  for (const Monomial& g : gens) {
    const long long n = g.degree(f.w);
    const auto sec = sections(f, s, {n, 0});
    if (std::find(sec.begin(), sec.end(), g) == sec.end())
      throw Error("generator is not a section at its own degree");
  }
  std::map<Monomial, bool> memo;
  for (long long n = 1; n <= N; ++n)
    for (const Monomial& m : sections(f, s, {n, 0}))
      if (!detail::in_span(m, gens, memo)) return {false, m, n};
  return {};
}

// Greedy minimal generators of the certified section ring up to degree N.
inline std::vector<Monomial> ring_generators(const FamilyRecord& f,
                                             const QuotientSingularity& s,
                                             long long N) {
  std::vector<Monomial> gens;
  std::map<Monomial, bool> memo;
  for (long long n = 1; n <= N; ++n)
    for (const Monomial& m : sections(f, s, {n, 0}))
      if (!detail::in_span(m, gens, memo)) {
        gens.push_back(m);
        memo.clear();
      }
  return gens;
}

// A mobile system spanned by equal-degree monomials.
struct PencilSystem {
  std::vector<Monomial> generators;
  long long n = 0;  // common weighted degree
  bool operator==(const PencilSystem&) const = default;
};

inline PencilSystem make_pencil(const FamilyRecord& f,
                                std::vector<Monomial> gens) {
  if (gens.size() < 2) throw Error("pencil needs at least 2 generators");
  PencilSystem p;
  p.n = gens.front().degree(f.w);
  for (const Monomial& g : gens)
    if (g.degree(f.w) != p.n) throw Error("pencil generators of mixed degree");
  p.generators = std::move(gens);
  return p;
}

// A candidate centre: either the base curve of a pencil or one singular point
// (location class plus index 1..count).
struct Centre {
  enum class Kind { BaseCurve, Point };
  Kind kind = Kind::Point;
  std::array<int, 2> curve_vars{-1, -1};  // {x_i = x_j = 0} cut on X
  Location location;
  int index = 0;

  bool operator==(const Centre&) const = default;
  auto operator<=>(const Centre&) const = default;
};

inline Centre curve_centre(int i, int j) {
  Centre c;
  c.kind = Centre::Kind::BaseCurve;
  c.curve_vars = {i, j};
  return c;
}

inline Centre point_centre(const Location& loc, int index) {
  Centre c;
  c.kind = Centre::Kind::Point;
  c.location = loc;
  c.index = index;
  return c;
}

// Centres of valuations that are strictly canonical or worse for the pair
// (X, (1/n) P). The base curve enters iff its generic multiplicity reaches n;
// a quotient point of index r enters iff r times the minimal vanishing order
// of the generators reaches n (the order is measured against a_E = 1/r).
inline std::vector<Centre> cs_of_pencil(const FamilyRecord& f,
                                        const PencilSystem& p) {
  std::vector<Centre> out;
  std::vector<int> support;
  for (int v = 0; v < 5; ++v)
    for (const Monomial& g : p.generators)
      if (g[v] > 0) {
        support.push_back(v);
        break;
      }
  if (support.size() == 2) {
    long long mult = -1;
    for (const Monomial& g : p.generators) {
      long long m = 0;
      for (int v : support) m += g[v];
      mult = (mult < 0) ? m : std::min(mult, m);
    }
    if (mult >= p.n) out.push_back(curve_centre(support[0], support[1]));
  }
  for (const QuotientSingularity& s : singular_locus(f)) {
    const LocalChart ch = local_chart(f, s);
    std::optional<Rational> minord;
    for (const Monomial& g : p.generators) {
      const auto o = vanishing_order(ch, g);
      if (!o)
        throw DependentGenerator("pencil generator meets the dependent "
                                 "variable of a chart");
      if (!minord || *o < *minord) minord = *o;
    }
    if (*minord * s.r >= p.n)
      for (int k = 1; k <= s.count; ++k)
        out.push_back(point_centre(s.location, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fano
