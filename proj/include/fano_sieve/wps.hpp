#pragma once

// Weighted-projective combinatorics for P(w0,...,w4): weights, monomials and
// graded enumeration. Fixed at 5 variables; by the catalog convention the
// first weight is 1.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fano_sieve/errors.hpp"

namespace fano {

struct Weights {
  std::array<int, 5> w{1, 1, 1, 1, 1};

  int operator[](int i) const { return w[static_cast<size_t>(i)]; }
  bool operator==(const Weights&) const = default;
};

inline Weights make_weights(int w0, int w1, int w2, int w3, int w4) {
  return Weights{{w0, w1, w2, w3, w4}};
}

// Well-formedness: positive entries, first weight 1, and gcd of every
// 4-element subset equal to 1. Violations are returned as data so that bad
// catalog rows can be reported rather than crash.
inline std::vector<std::string> weight_violations(const Weights& ws) {
  std::vector<std::string> out;
  for (int i = 0; i < 5; ++i)
    if (ws[i] < 1) out.push_back("weight w" + std::to_string(i) + " < 1");
  if (ws[0] != 1) out.push_back("w0 != 1");
  for (int skip = 0; skip < 5; ++skip) {
    int g = 0;
    for (int i = 0; i < 5; ++i)
      if (i != skip) g = std::gcd(g, ws[i]);
    if (g != 1)
      out.push_back("gcd of weights excluding w" + std::to_string(skip) +
                    " is " + std::to_string(g));
  }
  return out;
}

struct Monomial {
  std::array<int, 5> e{0, 0, 0, 0, 0};

  int operator[](int i) const { return e[static_cast<size_t>(i)]; }
  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

  long long degree(const Weights& ws) const {
    long long d = 0;
    for (int i = 0; i < 5; ++i) d += static_cast<long long>(e[i]) * ws[i];
    return d;
  }
  bool divides(const Monomial& m) const {
    for (int i = 0; i < 5; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  bool is_constant() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
};

inline Monomial pure_power(int var, int exp) {
  Monomial m;
  m.e[static_cast<size_t>(var)] = exp;
  return m;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < 5; ++i) m.e[i] = a.e[i] + b.e[i];
  return m;
}

// All exponent vectors of weighted degree d, in ascending lexicographic
// order on e. Degrees in this library stay in the low hundreds, so bounded
// recursion over exponents is enough.
inline std::vector<Monomial> monomials_of_degree(const Weights& ws, long long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  auto rec = [&](auto&& self, int i, long long rem) -> void {
    if (i == 4) {
      if (rem % ws[4] == 0) {
        cur.e[4] = static_cast<int>(rem / ws[4]);
        out.push_back(cur);
        cur.e[4] = 0;
      }
      return;
    }
    for (long long e = 0; e * ws[i] <= rem; ++e) {
      cur.e[i] = static_cast<int>(e);
      self(self, i + 1, rem - e * ws[i]);
    }
    cur.e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// Monomials of degree d supported only on the given variable indices.
inline std::vector<Monomial> restrict_to_stratum(const Weights& ws, long long d,
                                                 const std::set<int>& vars) {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(ws, d)) {
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i)
      if (m[i] > 0 && !vars.count(i)) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

// Variable naming convention of the catalog: a single weight-1 variable is x,
// several are x0,x1,...; the remaining variables are y,z,t,u in order.
inline std::array<std::string, 5> variable_names(const Weights& ws) {
  int ones = 0;
  for (int i = 0; i < 5; ++i)
    if (ws[i] == 1) ++ones;
  std::array<std::string, 5> names;
  const char* tail[4] = {"y", "z", "t", "u"};
  int k = 0;
  for (int i = 0; i < 5; ++i) {
    if (i < ones)
      names[i] = (ones == 1) ? "x" : "x" + std::to_string(i);
    else
      names[i] = tail[k++];
  }
  return names;
}

inline std::string format_monomial(const Monomial& m,
                                   const std::array<std::string, 5>& names) {
  std::string s;
  for (int i = 0; i < 5; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace fano
