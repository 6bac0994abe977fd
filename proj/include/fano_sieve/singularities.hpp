#pragma once

// Singular locus of a general member: cyclic quotient types at coordinate
// vertices and on one-dimensional coordinate strata, with point counts.
//
// The general member is modeled by the coefficient convention: every monomial
// of the right degree is present with a generic coefficient. No explicit
// polynomial is ever written down. Two-dimensional strata and the vertex of
// the weight-1 variable are skipped: general members are smooth there.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fano_sieve/errors.hpp"
#include "fano_sieve/wps.hpp"

namespace fano {

struct Location {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  int i = -1;  // vertex index, or smaller stratum index
  int j = -1;  // larger stratum index (-1 for vertices)

  bool operator==(const Location&) const = default;
  auto operator<=>(const Location&) const = default;
};

inline Location vertex_location(int i) { return {Location::Kind::Vertex, i, -1}; }
inline Location edge_location(int i, int j) { return {Location::Kind::Edge, i, j}; }

// A terminal cyclic quotient point 1/r(1,a,r-a).
struct QuotientSingularity {
  int r = 0;
  int a = 0;
  Location location;
  int count = 0;                         // points at this location
  std::array<int, 3> transverse_vars{};  // local coordinates on X
  bool operator==(const QuotientSingularity&) const = default;
};

using SingularLocus = std::vector<QuotientSingularity>;

struct NormalizedQuotient {
  int a;     // type is 1/r(1,a,r-a)
  int unit;  // the unit u with u*(w1,w2,w3) == (1,a,r-a) mod r (up to order)
};

// Normalize a cyclic quotient 1/r(w1,w2,w3) to the terminal form 1/r(1,a,r-a).
// Units are tried in ascending order, the identity permutation before the
// others, and the first positional match wins; this reproduces the catalog's
// presentation (e.g. 1/5(1,4,6) -> a = 4, not the equivalent a = 1).
// Returns nullopt when the type is not terminal, in particular when some
// weight is divisible by r.
inline std::optional<NormalizedQuotient> normalize_quotient(
    int r, const std::array<int, 3>& triple) {
  if (r < 2) return std::nullopt;
  std::array<int, 3> b{};
  for (int k = 0; k < 3; ++k) {
    b[k] = ((triple[k] % r) + r) % r;
    if (b[k] == 0) return std::nullopt;
  }
  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int u = 1; u < r; ++u) {
    if (std::gcd(u, r) != 1) continue;
    for (const auto& p : kPerms) {
      const int v0 = (u * b[p[0]]) % r;
      const int v1 = (u * b[p[1]]) % r;
      const int v2 = (u * b[p[2]]) % r;
      if (v0 == 1 && (v1 + v2) % r == 0 && std::gcd(v1, r) == 1)
        return NormalizedQuotient{v1, u};
    }
  }
  return std::nullopt;
}

namespace detail {

inline std::array<int, 3> other_three(int i, int j) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 5; ++v)
    if (v != i && v != j) out[k++] = v;
  return out;
}

// Smallest j != i such that x_i^k x_j has weighted degree d.
inline std::optional<int> tangent_partner(const Weights& ws, long long d, int i) {
  for (int j = 0; j < 5; ++j) {
    if (j == i) continue;
    const long long rem = d - ws[j];
    if (rem >= 0 && rem % ws[i] == 0) return j;
  }
  return std::nullopt;
}

}  // namespace detail

// Quotient singularity of the general member at the coordinate vertex P_i.
// None when w_i | d (the pure power x_i^{d/w_i} is present, so P_i is not on
// X). Throws NoTangentMonomial when no x_i^k x_j of degree d exists, which
// signals a non-quasismooth catalog row.
inline std::optional<QuotientSingularity> vertex_singularity(long long d,
                                                             const Weights& ws,
                                                             int i) {
  if (d % ws[i] == 0) return std::nullopt;
  const auto j = detail::tangent_partner(ws, d, i);
  if (!j)
    throw NoTangentMonomial("vertex " + std::to_string(i) + " of degree-" +
                            std::to_string(d) + " hypersurface");
  const auto tv = detail::other_three(i, *j);
  const auto nq = normalize_quotient(
      ws[i], {ws[tv[0]], ws[tv[1]], ws[tv[2]]});
  QuotientSingularity s;
  s.r = ws[i];
  s.a = nq ? nq->a : 0;  // a = 0 marks a non-terminal type
  s.location = vertex_location(i);
  s.count = 1;
  s.transverse_vars = tv;
  return s;
}

// Singular points of the general member on the open (x_i, x_j) stratum,
// for r = gcd(w_i, w_j) >= 2. The generic degree-d form restricted to the
// stratum is a binary form; vertex roots are stripped off as the monomial
// gcd and the remaining degree is divided by lcm(w_i, w_j) to count points.
inline std::optional<QuotientSingularity> stratum_points(long long d,
                                                         const Weights& ws,
                                                         int i, int j) {
  const int r = std::gcd(ws[i], ws[j]);
  if (r < 2) return std::nullopt;
  std::vector<std::pair<long long, long long>> sols;
  for (long long a = 0; a * ws[i] <= d; ++a) {
    const long long rem = d - a * ws[i];
    if (rem % ws[j] == 0) sols.emplace_back(a, rem / ws[j]);
  }
  if (sols.empty())
    throw EmptyRestriction("stratum (" + std::to_string(i) + "," +
                           std::to_string(j) + ") of degree-" +
                           std::to_string(d) + " hypersurface");
  long long amin = sols[0].first, bmin = sols[0].second;
  for (const auto& [a, b] : sols) {
    amin = std::min(amin, a);
    bmin = std::min(bmin, b);
  }
  const long long remaining = d - amin * ws[i] - bmin * ws[j];
  const long long l = static_cast<long long>(ws[i]) / r * ws[j];
  if (remaining % l != 0)
    throw Error("stratum degree " + std::to_string(remaining) +
                " not divisible by lcm " + std::to_string(l));
  const long long count = remaining / l;
  if (count == 0) return std::nullopt;
  const auto tv = detail::other_three(i, j);
  const auto nq = normalize_quotient(r, {ws[tv[0]], ws[tv[1]], ws[tv[2]]});
  QuotientSingularity s;
  s.r = r;
  s.a = nq ? nq->a : 0;
  s.location = edge_location(i, j);
  s.count = static_cast<int>(count);
  s.transverse_vars = tv;
  return s;
}

// Full singular locus, in the presentation order used throughout the reports:
// vertices by ascending index, then strata by descending (i,j).
inline SingularLocus singular_locus(long long d, const Weights& ws) {
  SingularLocus out;
  for (int i = 1; i < 5; ++i) {
    if (ws[i] < 2) continue;
    if (auto s = vertex_singularity(d, ws, i)) out.push_back(*s);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
  std::sort(edges.begin(), edges.end(), std::greater<>());
  for (const auto& [i, j] : edges)
    if (auto s = stratum_points(d, ws, i, j)) out.push_back(*s);
  return out;
}

// Terminality and consistency violations of the whole locus, as data.
inline std::vector<std::string> locus_violations(long long d, const Weights& ws) {
  std::vector<std::string> out;
  // two-dimensional strata must be smooth
  for (int i = 1; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) {
        const int g = std::gcd(std::gcd(ws[i], ws[j]), ws[k]);
        if (g > 1)
          out.push_back("two-dimensional singular stratum: gcd(w" +
                        std::to_string(i) + ",w" + std::to_string(j) + ",w" +
                        std::to_string(k) + ") = " + std::to_string(g));
      }
  try {
    for (const QuotientSingularity& s : singular_locus(d, ws)) {
      if (s.a == 0)
        out.push_back("non-terminal quotient 1/" + std::to_string(s.r) +
                      " at a " +
                      (s.location.kind == Location::Kind::Vertex ? "vertex"
                                                                 : "stratum"));
      if (s.count < 1) out.push_back("nonpositive point count");
    }
  } catch (const Error& e) {
    out.push_back(e.what());
  }
  return out;
}

inline std::string format_type(const QuotientSingularity& s,
                               const std::array<std::string, 5>& names) {
  std::string t = "1/" + std::to_string(s.r) + "(1," + std::to_string(s.a) +
                  "," + std::to_string(s.r - s.a) + ")_{";
  for (int k = 0; k < 3; ++k) {
    if (k) t += ",";
    t += names[s.transverse_vars[k]];
  }
  return t + "}";
}

}  // namespace fano
