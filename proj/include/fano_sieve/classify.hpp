#pragma once

// Per-family orchestration: singular locus -> blowup contexts -> exclusion
// verdicts -> candidate centre sets -> anticanonical-ring verification and
// fibration conclusions, with rule citations. Reports serialize to JSON and
// to a text layout that mirrors the exclusion tables of the classification
// literature.

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fano_sieve/blowup.hpp"
#include "fano_sieve/catalog.hpp"
#include "fano_sieve/exclusion.hpp"

namespace fano {

// Display labels for the locus, in locus order: vertices are P_<var>, the
// stratum classes get P, Q, R, ... ; multi-point classes append _1.._k.
inline std::vector<std::string> locus_labels(const FamilyRecord& f,
                                             const SingularLocus& locus) {
  const auto names = variable_names(f.w);
  std::vector<std::string> out;
  char next = 'P';
  for (const QuotientSingularity& s : locus) {
    if (s.location.kind == Location::Kind::Vertex)
      out.push_back("P_" + names[s.location.i]);
    else
      out.push_back(std::string(1, next++));
  }
  return out;
}

inline std::string point_label(const std::string& base, int index, int count) {
  return count == 1 ? base : base + "_" + std::to_string(index);
}

struct RingAnalysis {
  std::vector<Monomial> generators;  // sorted by (degree, descending exponents)
  std::vector<long long> degrees;
  long long bound = 0;  // degree up to which the generators are verified
};

// Greedy generator discovery with a self-adjusting horizon: the certified
// section semigroup is scanned at least to min_horizon and to four times the
// lcm of the discovered generator degrees. A pencil-driven analysis floors
// the horizon at 4*lcm of the pencil degrees; a potential point has no
// pencil, so the floor is 4*(largest weight), which covers any single
// variable that could still enter as a generator. A user-supplied bound
// below the certification horizon raises IncompleteEvidence.
inline RingAnalysis analyze_ring(const FamilyRecord& f,
                                 const QuotientSingularity& s,
                                 std::optional<long long> fixed_bound,
                                 long long min_horizon = 4) {
  RingAnalysis ra;
  std::vector<Monomial> gens;
  std::map<Monomial, bool> memo;
  long long horizon = std::max<long long>(4, min_horizon);
  auto lcm_degrees = [&]() {
    long long l = 1;
    for (const Monomial& g : gens) l = std::lcm(l, g.degree(f.w));
    return l;
  };
  const long long limit = fixed_bound ? *fixed_bound : -1;
  for (long long n = 1; limit >= 0 ? n <= limit : n <= horizon; ++n) {
    for (const Monomial& m : sections(f, s, {n, 0}))
      if (!detail::in_span(m, gens, memo)) {
        gens.push_back(m);
        memo.clear();
        horizon = std::max(horizon, 4 * lcm_degrees());
      }
  }
  ra.bound = limit >= 0 ? limit : horizon;
  if (ra.bound < 4 * lcm_degrees())
    throw IncompleteEvidence(
        "degree bound " + std::to_string(ra.bound) +
        " cannot certify the generator set; need at least " +
        std::to_string(4 * lcm_degrees()));
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(f.w), db = b.degree(f.w);
    if (da != db) return da < db;
    return b < a;  // x0 before x1
  });
  ra.generators = gens;
  for (const Monomial& g : gens) ra.degrees.push_back(g.degree(f.w));
  return ra;
}

// Well-formed reduction of weighted projective base coordinates: divide out
// the overall common factor, then repeatedly divide all-but-one weight by
// their common factor (coprime to the remaining one once the overall gcd is
// 1). P(1,b) reduces to P^1.
inline std::vector<int> normalize_base_weights(std::vector<int> ws) {
  for (bool changed = true; changed;) {
    changed = false;
    int all = 0;
    for (int w : ws) all = std::gcd(all, w);
    if (all > 1) {
      for (int& w : ws) w /= all;
      changed = true;
    }
    for (size_t i = 0; i < ws.size() && !changed; ++i) {
      int g = 0;
      for (size_t j = 0; j < ws.size(); ++j)
        if (j != i) g = std::gcd(g, ws[j]);
      if (g > 1) {
        for (size_t j = 0; j < ws.size(); ++j)
          if (j != i) ws[j] /= g;
        changed = true;
      }
    }
  }
  std::sort(ws.begin(), ws.end());
  return ws;
}

inline std::string format_base(const std::vector<int>& ws) {
  if (std::all_of(ws.begin(), ws.end(), [](int w) { return w == 1; }))
    return "P^" + std::to_string(ws.size() - 1);
  std::string s = "P(";
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ws[i]);
  }
  return s + ")";
}

struct FibrationConclusion {
  enum class Kind { K3, Elliptic };
  Kind kind = Kind::K3;
  std::vector<Monomial> map_monomials;   // projection presentation
  std::vector<Monomial> ring_generators; // R(Y,B) generators
  std::vector<int> base_weights_raw;
  std::vector<int> base_weights_normalized;
  long long degree_bound = 0;
  std::vector<std::string> anchor_labels;
  std::vector<std::string> evidence;
  std::vector<std::string> premises;
  std::string status;  // documented / externally classified / unconfirmed
};

struct ClassificationReport {
  FamilyRecord family;
  SingularLocus locus;
  std::vector<std::string> labels;
  std::vector<BlowupContext> blowups;  // one per locus entry
  CSReport cs;
  std::vector<FibrationConclusion> fibrations;
  std::optional<bool> no_elliptic;
  std::optional<bool> fano_rigid;
  std::vector<std::string> notes;
};

inline std::string conclusion_status(int family_id) {
  switch (family_id) {
    case 34:
    case 75:
    case 88:
    case 90:
      return "documented in the classification literature";
    case 5:
      return "externally classified (predecessor work)";
    default:
      return "unconfirmed";
  }
}

inline ClassificationReport classify(
    const FamilyRecord& f, std::optional<long long> degree_bound = std::nullopt) {
  ClassificationReport rep;
  rep.family = f;
  rep.locus = singular_locus(f);
  rep.labels = locus_labels(f, rep.locus);
  for (const QuotientSingularity& s : rep.locus)
    rep.blowups.push_back(blowup_context(f, s));
  rep.cs = cs_candidates(f);

  // candidate sets with the verdicts that produced them
  struct SetInfo {
    std::vector<Centre> set;
    std::vector<size_t> anchor_locus_indices;
    std::optional<PencilSystem> pencil;
  };
  std::vector<SetInfo> infos;
  auto find_info = [&](const std::vector<Centre>& cs) -> SetInfo& {
    for (SetInfo& si : infos)
      if (si.set == cs) return si;
    infos.push_back({cs, {}, std::nullopt});
    return infos.back();
  };
  for (const Verdict& v : rep.cs.verdicts) {
    if (v.subject != Verdict::Subject::SingularPoint) continue;
    size_t locus_idx = 0;
    for (size_t i = 0; i < rep.locus.size(); ++i)
      if (rep.locus[i].location == v.point->location) locus_idx = i;
    if (v.outcome == Outcome::Potential) {
      for (int k = 1; k <= v.point->count; ++k) {
        SetInfo& si = find_info({point_centre(v.point->location, k)});
        si.anchor_locus_indices.push_back(locus_idx);
      }
    } else if (v.outcome == Outcome::ExcludedConditional) {
      SetInfo& si = find_info(cs_of_pencil(f, *v.pencil));
      si.anchor_locus_indices.push_back(locus_idx);
      si.pencil = v.pencil;
    }
  }
  if (infos.size() != rep.cs.candidate_sets.size())
    throw Error("candidate set bookkeeping mismatch");

  bool all_analyzed = true;
  bool any_elliptic = false;
  bool rings_small = true;
  for (const SetInfo& si : infos) {
    const size_t a0 = si.anchor_locus_indices.front();
    const QuotientSingularity& anchor = rep.locus[a0];
    const BlowupContext& ctx = rep.blowups[a0];
    if (ctx.B3 > 0) {
      all_analyzed = false;
      rep.notes.push_back(
          "candidate set anchored at " + rep.labels[a0] +
          " not analyzed: B^3 > 0, the certified monomial calculus "
          "undercounts the anticanonical ring there");
      continue;
    }
    long long floor_horizon = 4;
    if (si.pencil) {
      long long l = 1;
      for (const Monomial& g : si.pencil->generators)
        l = std::lcm(l, g.degree(f.w));
      floor_horizon = 4 * l;
    } else {
      floor_horizon = 4 * *std::max_element(f.w.w.begin(), f.w.w.end());
    }
    RingAnalysis ra = analyze_ring(f, anchor, degree_bound, floor_horizon);
    for (size_t ai : si.anchor_locus_indices) {
      if (ai == a0) continue;
      const RingAnalysis other =
          analyze_ring(f, rep.locus[ai], degree_bound, floor_horizon);
      if (other.degrees != ra.degrees)
        throw IncompleteEvidence(
            "anchors of one candidate set disagree on ring generators");
    }
    const RingCheck chk = verify_ring_generators(f, anchor, ra.generators, ra.bound);
    if (!chk.ok)
      throw IncompleteEvidence("generator verification failed at degree " +
                               std::to_string(chk.degree));
    if (ra.generators.size() > 3) rings_small = false;
    if (ra.generators.size() != 2 && ra.generators.size() != 3) {
      rep.notes.push_back("candidate set anchored at " + rep.labels[a0] +
                          ": ring has " + std::to_string(ra.generators.size()) +
                          " generators, no fibration inferred");
      continue;
    }
    FibrationConclusion fc;
    fc.ring_generators = ra.generators;
    for (long long d : ra.degrees) fc.base_weights_raw.push_back(static_cast<int>(d));
    fc.base_weights_normalized = normalize_base_weights(fc.base_weights_raw);
    fc.degree_bound = ra.bound;
    for (size_t ai : si.anchor_locus_indices)
      if (std::find(fc.anchor_labels.begin(), fc.anchor_labels.end(),
                    rep.labels[ai]) == fc.anchor_labels.end())
        fc.anchor_labels.push_back(rep.labels[ai]);
    fc.status = conclusion_status(f.id);
    if (ra.generators.size() == 2) {
      fc.kind = FibrationConclusion::Kind::K3;
      if (si.pencil) {
        fc.map_monomials = si.pencil->generators;
        std::sort(fc.map_monomials.begin(), fc.map_monomials.end(),
                  std::greater<>());
        fc.evidence.push_back(rules::kTClassConditional);
        fc.evidence.push_back(rules::kPencilCS);
      } else {
        fc.map_monomials = ra.generators;
      }
      fc.evidence.push_back("ring verified to degree " +
                            std::to_string(ra.bound) + ": 2 generators");
      fc.premises.push_back(
          "curve base: fibers are anticanonical K3 surfaces (two-ray game "
          "route documented for this family class)");
    } else {
      fc.kind = FibrationConclusion::Kind::Elliptic;
      fc.map_monomials = ra.generators;
      any_elliptic = true;
      fc.evidence.push_back("anticanonical morphism at a B^3 = 0 point");
      fc.evidence.push_back("ring verified to degree " +
                            std::to_string(ra.bound) + ": 3 generators");
      fc.premises.push_back(
          "surface base: generic fiber is an elliptic curve (Newton-polygon "
          "genus premise)");
    }
    rep.fibrations.push_back(std::move(fc));
  }

  std::sort(rep.fibrations.begin(), rep.fibrations.end(),
            [](const FibrationConclusion& a, const FibrationConclusion& b) {
              if (a.kind != b.kind)
                return a.kind == FibrationConclusion::Kind::K3;
              return a.anchor_labels < b.anchor_labels;
            });
  if (all_analyzed && !infos.empty()) {
    rep.no_elliptic = !any_elliptic;
    if (f.superrigid && rings_small) rep.fano_rigid = true;
  }
  if (!f.superrigid)
    rep.notes.push_back(
        "family not flagged superrigid: no rigidity conclusion drawn");
  return rep;
}

}  // namespace fano
