#pragma once

// Catalog of the weighted-hypersurface families: TSV ingestion, validation
// and serving. The table itself is shipped as data (see data/families.tsv);
// this module validates rows but does not derive them.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fano_sieve/rational.hpp"
#include "fano_sieve/singularities.hpp"
#include "fano_sieve/wps.hpp"

namespace fano {

struct FamilyRecord {
  int id = 0;
  int d = 0;  // hypersurface degree
  Weights w;
  bool superrigid = false;  // external assertion, input data
  bool general_member_assumed = true;

  bool operator==(const FamilyRecord&) const = default;
};

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string detail;
};

// Per-row validation. Failures are data, not exceptions; terminality
// delegates to the singularity analysis.
inline std::vector<CheckResult> validate_record(const FamilyRecord& r) {
  std::vector<CheckResult> out;
  const bool id_ok = r.id >= 1 && r.id <= 95;
  out.push_back({"id in 1..95", id_ok, "id = " + std::to_string(r.id)});

  const auto wv = weight_violations(r.w);
  std::string wd;
  for (const auto& v : wv) wd += (wd.empty() ? "" : "; ") + v;
  out.push_back({"weights well-formed", wv.empty(), wd});

  const long long sum = r.w[1] + r.w[2] + r.w[3] + r.w[4];
  out.push_back({"adjunction d = w1+w2+w3+w4", r.d == sum,
                 std::to_string(r.d) + " vs " + std::to_string(sum)});

  if (wv.empty() && r.d == sum) {
    const auto lv = locus_violations(r.d, r.w);
    std::string ld;
    for (const auto& v : lv) ld += (ld.empty() ? "" : "; ") + v;
    out.push_back({"terminal singular locus", lv.empty(), ld});
  } else {
    out.push_back({"terminal singular locus", false,
                   "skipped: structural checks failed"});
  }
  return out;
}

struct Catalog {
  std::map<int, FamilyRecord> records;
  std::string source_path;
  std::uint64_t source_hash = 0;

  const FamilyRecord& at(int id) const {
    auto it = records.find(id);
    if (it == records.end())
      throw ValidationError("family id " + std::to_string(id) +
                            " not in catalog");
    return it->second;
  }
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline int parse_int(const std::string& tok, int line_no) {
  try {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected integer, got '" + tok + "'");
  }
}

}  // namespace detail

// Catalog format: one row per family, columns
//   id  d  w0 w1 w2 w3 w4  superrigid(0/1)
// separated by tabs (any whitespace is accepted); '#' starts a comment line.
inline Catalog parse_catalog(const std::string& text, const std::string& path) {
  Catalog cat;
  cat.source_path = path;
  cat.source_hash = detail::fnv1a64(text);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::string> failures;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    std::vector<std::string> toks;
    std::string tok;
    while (row >> tok) toks.push_back(tok);
    if (toks.size() != 8)
      throw ParseError("line " + std::to_string(line_no) + ": expected 8 columns, got " +
                       std::to_string(toks.size()));
    FamilyRecord r;
    r.id = detail::parse_int(toks[0], line_no);
    r.d = detail::parse_int(toks[1], line_no);
    for (int k = 0; k < 5; ++k)
      r.w.w[k] = detail::parse_int(toks[2 + k], line_no);
    const int sr = detail::parse_int(toks[7], line_no);
    if (sr != 0 && sr != 1)
      throw ParseError("line " + std::to_string(line_no) +
                       ": superrigid flag must be 0 or 1");
    r.superrigid = sr == 1;
    if (cat.records.count(r.id))
      throw ValidationError("duplicate family id " + std::to_string(r.id));
    for (const CheckResult& c : validate_record(r))
      if (!c.pass)
        failures.push_back("family " + std::to_string(r.id) + ": " + c.check +
                           " (" + c.detail + ")");
    cat.records[r.id] = r;
  }
  if (!failures.empty()) {
    std::string msg;
    for (const auto& f : failures) msg += (msg.empty() ? "" : "; ") + f;
    throw ValidationError(msg);
  }
  return cat;
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open catalog file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_catalog(buf.str(), path);
}

inline std::string serialize_catalog(const Catalog& cat) {
  std::ostringstream out;
  out << "# fano-sieve family catalog\n"
      << "# columns: id\td\tw0 w1 w2 w3 w4\tsuperrigid(0/1)\n";
  for (const auto& [id, r] : cat.records) {
    out << id << '\t' << r.d;
    for (int k = 0; k < 5; ++k) out << '\t' << r.w[k];
    out << '\t' << (r.superrigid ? 1 : 0) << '\n';
  }
  return out.str();
}

inline SingularLocus singular_locus(const FamilyRecord& f) {
  return singular_locus(f.d, f.w);
}

// Anticanonical self-intersection A^3 = d / (w1 w2 w3 w4).
inline Rational anticanonical_cube(const FamilyRecord& f) {
  return Rational(f.d, static_cast<long long>(f.w[1]) * f.w[2] * f.w[3] * f.w[4]);
}

}  // namespace fano
