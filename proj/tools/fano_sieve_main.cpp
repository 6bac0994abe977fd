// fano-sieve: exact-arithmetic classification pipeline for Q-Fano 3-fold
// weighted hypersurfaces. Subcommands:
//   catalog validate <file>       validate a family table
//   analyze <id>                  singularity table of one family
//   exclude <id>                  exclusion verdicts of one family
//   classify <id> [--json] [--degree-bound N]
//   resolve <r> <a>               Hirzebruch-Jung chain of 1/r(1,a)
//   genus <d> <w0> <w1> <w2>      Newton-polygon interior points
//
// Exit codes: 0 success, 2 validation failure, 3 incomplete evidence.
// FANO_SIEVE_CATALOG overrides the default catalog path.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fano_sieve/classify.hpp"
#include "fano_sieve/report.hpp"
#include "fano_sieve/surface.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIncomplete = 3;

std::string default_catalog_path() {
  if (const char* env = std::getenv("FANO_SIEVE_CATALOG")) return env;
  const std::string local = "data/families.tsv";
  if (std::filesystem::exists(local)) return local;
#ifdef FANO_SIEVE_DATA_DIR
  return std::string(FANO_SIEVE_DATA_DIR) + "/families.tsv";
#else
  return local;
#endif
}

fano::Catalog open_catalog(const std::string& path) {
  return fano::load_catalog(path.empty() ? default_catalog_path() : path);
}

void print_locus(const fano::FamilyRecord& f) {
  const auto names = fano::variable_names(f.w);
  const auto locus = fano::singular_locus(f);
  const auto labels = fano::locus_labels(f, locus);
  std::cout << "family " << f.id << ": X_" << f.d << " in P(";
  for (int k = 0; k < 5; ++k) std::cout << (k ? "," : "") << f.w[k];
  std::cout << ")\n";
  if (locus.empty()) {
    std::cout << "  smooth: no quotient singularities\n";
    return;
  }
  for (size_t i = 0; i < locus.size(); ++i) {
    const auto& s = locus[i];
    std::cout << "  " << labels[i] << "  ~ " << fano::format_type(s, names)
              << "  "
              << (s.location.kind == fano::Location::Kind::Vertex
                      ? "vertex " + names[s.location.i]
                      : names[s.location.i] + names[s.location.j] + "-stratum")
              << "  count " << s.count << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fano-sieve: exact classification pipeline for Q-Fano 3-fold "
               "weighted hypersurfaces"};
  app.require_subcommand(1);

  auto* cat_cmd = app.add_subcommand("catalog", "catalog operations");
  cat_cmd->require_subcommand(1);
  std::string validate_path;
  auto* validate_cmd =
      cat_cmd->add_subcommand("validate", "validate a family table");
  validate_cmd->add_option("file", validate_path, "catalog TSV file")
      ->required();

  std::string catalog_opt;
  int family_id = 0;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "singularity table of one family");
  analyze_cmd->add_option("id", family_id, "family id")->required();
  analyze_cmd->add_option("--catalog", catalog_opt, "catalog file");

  auto* exclude_cmd =
      app.add_subcommand("exclude", "exclusion verdicts of one family");
  exclude_cmd->add_option("id", family_id, "family id")->required();
  exclude_cmd->add_option("--catalog", catalog_opt, "catalog file");

  bool as_json = false;
  long long degree_bound = 0;
  auto* classify_cmd =
      app.add_subcommand("classify", "full classification report");
  classify_cmd->add_option("id", family_id, "family id")->required();
  classify_cmd->add_flag("--json", as_json, "emit JSON");
  classify_cmd->add_option("--degree-bound", degree_bound,
                           "ring verification degree bound");
  classify_cmd->add_option("--catalog", catalog_opt, "catalog file");

  int hj_r = 0, hj_a = 0;
  auto* resolve_cmd =
      app.add_subcommand("resolve", "Hirzebruch-Jung chain of 1/r(1,a)");
  resolve_cmd->add_option("r", hj_r, "index r")->required();
  resolve_cmd->add_option("a", hj_a, "weight a")->required();

  int g_d = 0;
  std::array<int, 3> g_w{};
  auto* genus_cmd =
      app.add_subcommand("genus", "Newton-polygon interior lattice points");
  genus_cmd->add_option("d", g_d, "degree")->required();
  genus_cmd->add_option("w0", g_w[0], "weight of the first variable")->required();
  genus_cmd->add_option("w1", g_w[1], "weight of the second variable")->required();
  genus_cmd->add_option("w2", g_w[2], "weight of the third variable")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      const fano::Catalog cat = fano::load_catalog(validate_path);
      std::cout << "catalog OK: " << cat.records.size() << " families ("
                << cat.source_path << ", hash " << std::hex << cat.source_hash
                << std::dec << ")\n";
      return 0;
    }
    if (analyze_cmd->parsed()) {
      print_locus(open_catalog(catalog_opt).at(family_id));
      return 0;
    }
    if (exclude_cmd->parsed() || classify_cmd->parsed()) {
      const fano::FamilyRecord f = open_catalog(catalog_opt).at(family_id);
      std::optional<long long> bound;
      if (classify_cmd->parsed() && degree_bound > 0) bound = degree_bound;
      const fano::ClassificationReport rep = fano::classify(f, bound);
      if (classify_cmd->parsed())
        std::cout << fano::emit_report(rep, as_json ? "json" : "text");
      else
        std::cout << fano::emit_report(rep, "text");
      return 0;
    }
    if (resolve_cmd->parsed()) {
      const fano::HJChain chain = fano::hj_resolve(hj_r, hj_a);
      std::cout << hj_r << "/" << hj_a << " = [";
      for (size_t i = 0; i < chain.entries.size(); ++i)
        std::cout << (i ? "," : "") << chain.entries[i];
      std::cout << "]  self-intersections (";
      for (size_t i = 0; i < chain.entries.size(); ++i)
        std::cout << (i ? "," : "") << -chain.entries[i];
      std::cout << ")\n";
      return 0;
    }
    if (genus_cmd->parsed()) {
      const auto [count, pts] = fano::newton_interior_points(g_d, g_w);
      std::cout << "interior lattice points: " << count << "\n";
      for (const auto& p : pts)
        std::cout << "  (" << p[0] << "," << p[1] << "," << p[2] << ")\n";
      return 0;
    }
  } catch (const fano::IncompleteEvidence& e) {
    std::cerr << e.what() << "\n";
    return kExitIncomplete;
  } catch (const fano::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
