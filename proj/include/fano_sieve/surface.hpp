#pragma once

// Surface-level verification tools: Hirzebruch-Jung resolutions, strict
// transform numerics through exceptional chains, -1-curve contraction and
// blowdown runs, Du Val typing, Newton-polygon interior points, adjunction.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fano_sieve/errors.hpp"
#include "fano_sieve/rational.hpp"

namespace fano {

// Exceptional chain of the minimal resolution of a cyclic quotient surface
// point 1/r(1,a): curve self-intersections are -entries[k], chain-adjacent.
struct HJChain {
  std::vector<int> entries;
  bool operator==(const HJChain&) const = default;
};

// Continued-fraction expansion r/a = b1 - 1/(b2 - 1/(...)), all b_k >= 2.
inline HJChain hj_resolve(int r, int a) {
  if (r < 2 || a < 1 || a >= r || std::gcd(a, r) != 1)
    throw Error("hj_resolve needs r >= 2, 1 <= a < r, gcd(a,r) = 1");
  HJChain chain;
  while (a > 0) {
    const int b = (r + a - 1) / a;  // ceil(r/a)
    chain.entries.push_back(b);
    const int rn = a;
    a = b * a - r;
    r = rn;
  }
  return chain;
}

inline Rational hj_evaluate(const HJChain& chain) {
  if (chain.entries.empty()) throw Error("empty chain");
  Rational v = chain.entries.back();
  for (auto it = chain.entries.rbegin() + 1; it != chain.entries.rend(); ++it)
    v = Rational(*it) - 1 / v;
  return v;
}

namespace detail {

// Exact Gaussian elimination; throws SingularGram when no pivot exists.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw SingularGram("no pivot in column");
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    const Rational p = m[col][col];
    for (size_t k = col; k < n; ++k) m[col][k] /= p;
    rhs[col] /= p;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

inline std::vector<std::vector<Rational>> chain_gram(const HJChain& chain) {
  const size_t n = chain.entries.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    g[i][i] = -chain.entries[i];
    if (i + 1 < n) g[i][i + 1] = g[i + 1][i] = 1;
  }
  return g;
}

}  // namespace detail

// How the strict transform meets one exceptional chain: meets[k] is the
// intersection number with the k-th chain curve.
struct ChainAttachment {
  HJChain chain;
  std::vector<int> meets;
};

// Numbers of the strict transform on the minimal resolution. Writing the
// pullback as C~ + sum mu_i E_i and solving (C~ + sum mu_i E_i).E_j = 0 per
// chain gives C~^2 = C^2 - sum mu_i (E_i.C~). The canonical intersection uses
// the chain discrepancies d_i (solved from Gram.d = (-2 - E_j^2)_j, rational
// curves): K.C~ = K.C + sum d_i (E_i.C~).
inline std::pair<Rational, Rational> strict_transform_numbers(
    const Rational& c_squared, const Rational& k_dot_c,
    const std::vector<ChainAttachment>& attachments) {
  Rational c2 = c_squared, kc = k_dot_c;
  for (const ChainAttachment& at : attachments) {
    const size_t n = at.chain.entries.size();
    if (at.meets.size() != n)
      throw Error("attachment pattern length does not match chain length");
    const auto gram = detail::chain_gram(at.chain);
    std::vector<Rational> neg_meets(n), kvec(n);
    for (size_t i = 0; i < n; ++i) {
      neg_meets[i] = -Rational(at.meets[i]);
      kvec[i] = Rational(at.chain.entries[i] - 2);
    }
    const auto mu = detail::solve_linear(gram, neg_meets);
    const auto disc = detail::solve_linear(gram, kvec);
    for (size_t i = 0; i < n; ++i) {
      c2 -= mu[i] * at.meets[i];
      kc += disc[i] * at.meets[i];
    }
  }
  return {c2, kc};
}

// A configuration of rational curves on a smooth surface: self-intersections
// on the diagonal, symmetric nonnegative incidence off it.
struct CurveConfig {
  std::vector<int> self_int;
  std::vector<std::vector<int>> incidence;  // square, diagonal ignored

  size_t size() const { return self_int.size(); }
};

inline CurveConfig chain_config(const std::vector<int>& self_ints) {
  CurveConfig cfg;
  cfg.self_int = self_ints;
  const size_t n = self_ints.size();
  cfg.incidence.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i + 1 < n; ++i)
    cfg.incidence[i][i + 1] = cfg.incidence[i + 1][i] = 1;
  return cfg;
}

// Castelnuovo contraction of curve i: requires self-intersection -1; every
// other self-intersection gains incidence(i,j)^2 and every pair (j,k) gains
// incidence(i,j)*incidence(i,k).
inline CurveConfig blow_down(const CurveConfig& cfg, size_t i) {
  if (i >= cfg.size() || cfg.self_int[i] != -1)
    throw NotMinusOne("curve " + std::to_string(i) + " has self-intersection " +
                      (i < cfg.size() ? std::to_string(cfg.self_int[i]) : "?"));
  CurveConfig out;
  std::vector<size_t> keep;
  for (size_t j = 0; j < cfg.size(); ++j)
    if (j != i) keep.push_back(j);
  out.self_int.resize(keep.size());
  out.incidence.assign(keep.size(), std::vector<int>(keep.size(), 0));
  for (size_t a = 0; a < keep.size(); ++a) {
    const size_t j = keep[a];
    out.self_int[a] = cfg.self_int[j] + cfg.incidence[i][j] * cfg.incidence[i][j];
    for (size_t b = 0; b < keep.size(); ++b) {
      if (a == b) continue;
      const size_t k = keep[b];
      out.incidence[a][b] =
          cfg.incidence[j][k] + cfg.incidence[i][j] * cfg.incidence[i][k];
    }
  }
  return out;
}

struct MMPResult {
  CurveConfig final_config;
  // self-intersection snapshots after each contraction, in curve order
  std::vector<std::vector<int>> trace;
};

// Contract the lowest-indexed -1-curve until none remains. Terminates: each
// step removes a curve.
inline MMPResult run_mmp(CurveConfig cfg) {
  MMPResult res;
  for (;;) {
    size_t i = 0;
    while (i < cfg.size() && cfg.self_int[i] != -1) ++i;
    if (i == cfg.size()) break;
    cfg = blow_down(cfg, i);
    res.trace.push_back(cfg.self_int);
  }
  res.final_config = cfg;
  return res;
}

struct ADEType {
  char series = '?';  // 'A', 'D' or 'E'
  int rank = 0;
  bool operator==(const ADEType&) const = default;
};

inline std::string format_ade(const ADEType& t) {
  return std::string(1, t.series) + std::to_string(t.rank);
}

// Du Val typing by graph shape: all curves -2, simple incidences, connected
// tree; a path is A_n, one degree-3 node gives D_n/E_6/E_7/E_8 by arm
// lengths. Anything else is not Du Val.
inline std::optional<ADEType> du_val_type(const CurveConfig& cfg) {
  const size_t n = cfg.size();
  if (n == 0) return std::nullopt;
  for (size_t i = 0; i < n; ++i)
    if (cfg.self_int[i] != -2) return std::nullopt;
  size_t edges = 0;
  std::vector<size_t> degree(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (cfg.incidence[i][j] < 0 || cfg.incidence[i][j] > 1)
        return std::nullopt;
      if (cfg.incidence[i][j] == 1) {
        ++edges;
        ++degree[i];
        ++degree[j];
      }
    }
  if (edges != n - 1) return std::nullopt;  // not a tree
  std::vector<bool> seen(n, false);
  std::vector<size_t> stack{0};
  seen[0] = true;
  size_t visited = 1;
  while (!stack.empty()) {
    const size_t v = stack.back();
    stack.pop_back();
    for (size_t j = 0; j < n; ++j)
      if (cfg.incidence[v][j] == 1 && !seen[j]) {
        seen[j] = true;
        ++visited;
        stack.push_back(j);
      }
  }
  if (visited != n) return std::nullopt;
  const size_t branch_count =
      static_cast<size_t>(std::count_if(degree.begin(), degree.end(),
                                        [](size_t d) { return d >= 3; }));
  if (branch_count == 0) return ADEType{'A', static_cast<int>(n)};
  if (branch_count > 1) return std::nullopt;
  size_t center = 0;
  while (degree[center] < 3) ++center;
  if (degree[center] != 3) return std::nullopt;
  std::vector<int> arms;
  for (size_t j = 0; j < n; ++j) {
    if (cfg.incidence[center][j] != 1) continue;
    int len = 1;
    size_t prev = center, cur = j;
    for (;;) {
      size_t next = n;
      for (size_t k = 0; k < n; ++k)
        if (k != prev && cfg.incidence[cur][k] == 1) next = k;
      if (next == n) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return ADEType{'D', static_cast<int>(n)};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return ADEType{'E', static_cast<int>(n)};
  return std::nullopt;
}

// Lattice points of the degree-d plane in three weighted variables, interior
// to the convex hull of all degree-d exponent vectors. Interiority is tested
// on the 2-dimensional affine lattice (projection to the last two exponents
// is an affine bijection of the degree plane).
inline std::pair<int, std::vector<std::array<int, 3>>> newton_interior_points(
    int d, const std::array<int, 3>& w) {
  if (w[0] < 1 || w[1] < 1 || w[2] < 1) throw Error("weights must be positive");
  std::vector<std::array<int, 3>> pts;
  for (int e1 = 0; e1 * w[1] <= d; ++e1)
    for (int e2 = 0; e1 * w[1] + e2 * w[2] <= d; ++e2) {
      const int rem = d - e1 * w[1] - e2 * w[2];
      if (rem % w[0] == 0) pts.push_back({rem / w[0], e1, e2});
    }
  if (pts.empty()) throw EmptyPolygon("no monomials of degree " + std::to_string(d));
  using P2 = std::array<long long, 2>;
  std::vector<P2> proj;
  for (const auto& p : pts) proj.push_back({p[1], p[2]});
  std::sort(proj.begin(), proj.end());
  proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
  auto cross = [](const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<int, 3>> interior;
  if (proj.size() >= 3) {
    std::vector<P2> lower, upper;
    for (const P2& p : proj) {
      while (lower.size() >= 2 &&
             cross(lower[lower.size() - 2], lower.back(), p) <= 0)
        lower.pop_back();
      lower.push_back(p);
    }
    for (auto it = proj.rbegin(); it != proj.rend(); ++it) {
      while (upper.size() >= 2 &&
             cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
        upper.pop_back();
      upper.push_back(*it);
    }
    std::vector<P2> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    if (hull.size() >= 3) {
      auto on_boundary = [&](const P2& q) {
        for (size_t i = 0; i < hull.size(); ++i) {
          const P2& a = hull[i];
          const P2& b = hull[(i + 1) % hull.size()];
          if (cross(a, b, q) == 0 &&
              std::min(a[0], b[0]) <= q[0] && q[0] <= std::max(a[0], b[0]) &&
              std::min(a[1], b[1]) <= q[1] && q[1] <= std::max(a[1], b[1]))
            return true;
        }
        return false;
      };
      for (const auto& p : pts)
        if (!on_boundary({p[1], p[2]})) interior.push_back(p);
    }
  }
  return {static_cast<int>(interior.size()), interior};
}

// Canonical degree d - sum(w): zero flags the K3/elliptic adjunction case.
inline long long adjunction_check(long long d, const std::vector<int>& weights) {
  long long s = 0;
  for (int w : weights) s += w;
  return d - s;
}

}  // namespace fano
