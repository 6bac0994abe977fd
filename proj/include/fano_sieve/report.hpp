#pragma once

// Deterministic serialization of classification reports: versioned JSON and
// a text layout mirroring the exclusion tables of the literature.

#include <sstream>
#include <string>

#include <json.hpp>

#include "fano_sieve/classify.hpp"

namespace fano {

inline constexpr int kReportSchemaVersion = 1;

namespace detail {

inline std::string centre_label(const ClassificationReport& rep,
                                const Centre& c) {
  if (c.kind == Centre::Kind::BaseCurve) return "C";
  for (size_t i = 0; i < rep.locus.size(); ++i)
    if (rep.locus[i].location == c.location)
      return point_label(rep.labels[i], c.index, rep.locus[i].count);
  return "?";
}

inline std::string location_text(const ClassificationReport& rep,
                                 const Location& loc) {
  const auto names = variable_names(rep.family.w);
  if (loc.kind == Location::Kind::Vertex) return "vertex " + names[loc.i];
  return names[loc.i] + names[loc.j] + "-stratum";
}

inline std::string sign_text(const Rational& q) {
  if (q < 0) return " < 0";
  if (q > 0) return " > 0";
  return "";
}

inline const Verdict* point_verdict(const CSReport& cs, const Location& loc) {
  for (const Verdict& v : cs.verdicts)
    if (v.subject == Verdict::Subject::SingularPoint &&
        v.point->location == loc)
      return &v;
  return nullptr;
}

inline std::string monomial_list(const FamilyRecord& f,
                                 const std::vector<Monomial>& ms) {
  const auto names = variable_names(f.w);
  std::string s = "(";
  for (size_t i = 0; i < ms.size(); ++i) {
    if (i) s += ", ";
    s += format_monomial(ms[i], names);
  }
  return s + ")";
}

}  // namespace detail

inline std::string emit_report_json(const ClassificationReport& rep) {
  using json = nlohmann::ordered_json;
  const auto names = variable_names(rep.family.w);
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["family"] = {{"id", rep.family.id},
                 {"degree", rep.family.d},
                 {"weights", rep.family.w.w},
                 {"variables", names},
                 {"superrigid", rep.family.superrigid}};
  j["anticanonical_cube"] = to_string(anticanonical_cube(rep.family));

  json locus = json::array();
  for (size_t i = 0; i < rep.locus.size(); ++i) {
    const QuotientSingularity& s = rep.locus[i];
    json e;
    e["label"] = rep.labels[i];
    e["type"] = format_type(s, names);
    e["r"] = s.r;
    e["a"] = s.a;
    e["location"] = detail::location_text(rep, s.location);
    e["count"] = s.count;
    locus.push_back(e);
  }
  j["singular_locus"] = locus;

  json blowups = json::array();
  for (size_t i = 0; i < rep.blowups.size(); ++i) {
    const BlowupContext& c = rep.blowups[i];
    blowups.push_back({{"label", rep.labels[i]},
                       {"A3", to_string(c.A3)},
                       {"B3", to_string(c.B3)},
                       {"B2E", to_string(c.B2E)},
                       {"BE2", to_string(c.BE2)},
                       {"E3", to_string(c.E3)}});
  }
  j["blowups"] = blowups;

  json verdicts = json::array();
  for (const Verdict& v : rep.cs.verdicts) {
    json e;
    switch (v.subject) {
      case Verdict::Subject::Curves: e["subject"] = "curves"; break;
      case Verdict::Subject::SmoothPoints: e["subject"] = "smooth points"; break;
      case Verdict::Subject::SingularPoint:
        e["subject"] = detail::centre_label(
            rep, point_centre(v.point->location, 1));
        for (size_t i = 0; i < rep.locus.size(); ++i)
          if (rep.locus[i].location == v.point->location)
            e["subject"] = rep.labels[i];
        break;
    }
    e["outcome"] = outcome_name(v.outcome);
    e["rule"] = v.rule;
    e["detail"] = v.detail;
    if (v.t_class) e["t_class"] = format_class(*v.t_class);
    if (v.documented_class)
      e["documented_class"] = format_class(*v.documented_class);
    if (v.pencil)
      e["pencil"] = detail::monomial_list(rep.family, v.pencil->generators);
    if (!v.premises.empty()) e["premises"] = v.premises;
    verdicts.push_back(e);
  }
  j["verdicts"] = verdicts;

  json sets = json::array();
  for (const auto& cs : rep.cs.candidate_sets) {
    json one = json::array();
    for (const Centre& c : cs) one.push_back(detail::centre_label(rep, c));
    sets.push_back(one);
  }
  j["candidate_cs_sets"] = sets;

  json fibs = json::array();
  for (const FibrationConclusion& fc : rep.fibrations) {
    json e;
    e["kind"] = fc.kind == FibrationConclusion::Kind::K3 ? "K3" : "elliptic";
    json map = json::array(), gens = json::array();
    for (const Monomial& m : fc.map_monomials)
      map.push_back(format_monomial(m, names));
    for (const Monomial& m : fc.ring_generators)
      gens.push_back(format_monomial(m, names));
    e["map"] = map;
    e["ring_generators"] = gens;
    e["base"] = format_base(fc.base_weights_raw);
    e["base_normalized"] = format_base(fc.base_weights_normalized);
    e["degree_bound"] = fc.degree_bound;
    e["anchors"] = fc.anchor_labels;
    e["evidence"] = fc.evidence;
    e["premises"] = fc.premises;
    e["status"] = fc.status;
    fibs.push_back(e);
  }
  j["fibrations"] = fibs;
  if (rep.no_elliptic.has_value()) j["no_elliptic_fibration"] = *rep.no_elliptic;
  if (rep.fano_rigid.has_value()) j["fano_rigidity"] = *rep.fano_rigid;
  j["premises"] = rep.cs.premises;
  j["notes"] = rep.notes;
  return j.dump(2) + "\n";
}

inline std::string emit_report_text(const ClassificationReport& rep) {
  const auto names = variable_names(rep.family.w);
  std::ostringstream out;
  out << "family " << rep.family.id << ": X_" << rep.family.d << " in P(";
  for (int k = 0; k < 5; ++k) out << (k ? "," : "") << rep.family.w[k];
  out << ")";
  out << "  variables ";
  for (int k = 0; k < 5; ++k) out << (k ? "," : "") << names[k];
  out << "\nA^3 = " << to_string(anticanonical_cube(rep.family));
  out << "  superrigid: " << (rep.family.superrigid ? "yes" : "no") << "\n";

  out << "\nsingular locus\n";
  if (rep.locus.empty()) out << "  (empty)\n";
  for (size_t i = 0; i < rep.locus.size(); ++i) {
    const QuotientSingularity& s = rep.locus[i];
    out << "  " << rep.labels[i] << "  ~ " << format_type(s, names) << "  "
        << detail::location_text(rep, s.location) << "  count " << s.count
        << "\n";
  }

  out << "\nexclusion table (B = -K_Y on the Kawamata blowup)\n";
  for (size_t i = 0; i < rep.locus.size(); ++i) {
    const QuotientSingularity& s = rep.locus[i];
    const BlowupContext& c = rep.blowups[i];
    const Verdict* v = detail::point_verdict(rep.cs, s.location);
    out << "  " << rep.labels[i] << "  B^3 = " << to_string(c.B3)
        << detail::sign_text(c.B3) << "  " << outcome_name(v->outcome);
    const auto cls = v->documented_class ? v->documented_class : v->t_class;
    if (cls) {
      out << "  T ~ " << format_class(*cls);
      if (v->documented_class && v->t_class &&
          !(*v->documented_class == *v->t_class))
        out << " (search: " << format_class(*v->t_class) << ")";
    }
    if (v->pencil)
      out << "  pencil " << detail::monomial_list(rep.family, v->pencil->generators);
    out << "\n";
  }
  for (const Verdict& v : rep.cs.verdicts) {
    if (v.subject == Verdict::Subject::Curves)
      out << "  curves: " << outcome_name(v.outcome) << " -- " << v.detail << "\n";
    if (v.subject == Verdict::Subject::SmoothPoints)
      out << "  smooth points: " << outcome_name(v.outcome) << " -- "
          << v.detail << "\n";
  }

  out << "\npossible strictly-canonical centre sets\n";
  if (rep.cs.candidate_sets.empty()) out << "  (none)\n";
  for (const auto& cs : rep.cs.candidate_sets) {
    out << "  { ";
    for (size_t i = 0; i < cs.size(); ++i)
      out << (i ? ", " : "") << detail::centre_label(rep, cs[i]);
    out << " }\n";
  }

  out << "\nfibration conclusions\n";
  if (rep.fibrations.empty()) out << "  (none)\n";
  for (const FibrationConclusion& fc : rep.fibrations) {
    out << "  " << (fc.kind == FibrationConclusion::Kind::K3 ? "K3" : "elliptic")
        << " fibration: " << detail::monomial_list(rep.family, fc.map_monomials)
        << " : X --> " << format_base(fc.base_weights_normalized);
    std::string ring = detail::monomial_list(rep.family, fc.ring_generators);
    ring.front() = '[';
    ring.back() = ']';
    out << "  [ring k" << ring << ", base " << format_base(fc.base_weights_raw);
    if (fc.base_weights_raw != fc.base_weights_normalized)
      out << " ~ " << format_base(fc.base_weights_normalized);
    out << "; verified to degree " << fc.degree_bound << "; " << fc.status
        << "]\n";
  }
  if (rep.no_elliptic.has_value() && *rep.no_elliptic)
    out << "  no elliptic fibration birational to X (no candidate set yields "
           "a surface base)\n";
  if (rep.fano_rigid.has_value() && *rep.fano_rigid)
    out << "  Fano rigidity: every birational Fano model with canonical "
           "singularities is isomorphic to X\n";

  if (!rep.cs.premises.empty()) {
    out << "\npremises\n";
    for (const auto& p : rep.cs.premises) out << "  - " << p << "\n";
  }
  if (!rep.notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : rep.notes) out << "  - " << n << "\n";
  }
  return out.str();
}

inline std::string emit_report(const ClassificationReport& rep,
                               const std::string& format) {
  if (format == "json") return emit_report_json(rep);
  if (format == "text") return emit_report_text(rep);
  throw Error("unknown report format '" + format + "'");
}

}  // namespace fano
