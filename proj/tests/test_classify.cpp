#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "fano_sieve/report.hpp"
#include "test_util.hpp"

using fano::FibrationConclusion;
using testutil::shipped_catalog;

namespace {

const FibrationConclusion* find_kind(const fano::ClassificationReport& rep,
                                     FibrationConclusion::Kind k) {
  for (const auto& fc : rep.fibrations)
    if (fc.kind == k) return &fc;
  return nullptr;
}

std::vector<std::string> monomial_strings(const fano::FamilyRecord& f,
                                          const std::vector<fano::Monomial>& ms) {
  const auto names = fano::variable_names(f.w);
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(fano::format_monomial(m, names));
  return out;
}

}  // namespace

TEST_CASE("classify family 75: K3 via (x^4,y), no elliptic, rigid") {
  const auto rep = fano::classify(shipped_catalog().at(75));
  REQUIRE(rep.fibrations.size() == 1);
  const auto* k3 = find_kind(rep, FibrationConclusion::Kind::K3);
  REQUIRE(k3);
  CHECK(monomial_strings(rep.family, k3->map_monomials) ==
        std::vector<std::string>{"x^4", "y"});
  CHECK(monomial_strings(rep.family, k3->ring_generators) ==
        std::vector<std::string>{"x", "y"});
  CHECK(k3->base_weights_raw == std::vector<int>{1, 4});
  CHECK(fano::format_base(k3->base_weights_normalized) == "P^1");
  REQUIRE(rep.no_elliptic.has_value());
  CHECK(*rep.no_elliptic);
  REQUIRE(rep.fano_rigid.has_value());
  CHECK(*rep.fano_rigid);
}

TEST_CASE("classify family 34: K3 (x0,x1), elliptic (x0,x1,y) over P(1,1,2)") {
  const auto rep = fano::classify(shipped_catalog().at(34));
  const auto* k3 = find_kind(rep, FibrationConclusion::Kind::K3);
  REQUIRE(k3);
  CHECK(monomial_strings(rep.family, k3->map_monomials) ==
        std::vector<std::string>{"x0", "x1"});
  CHECK(fano::format_base(k3->base_weights_normalized) == "P^1");

  const auto* ell = find_kind(rep, FibrationConclusion::Kind::Elliptic);
  REQUIRE(ell);
  CHECK(monomial_strings(rep.family, ell->map_monomials) ==
        std::vector<std::string>{"x0", "x1", "y"});
  CHECK(fano::format_base(ell->base_weights_normalized) == "P(1,1,2)");
  REQUIRE(rep.no_elliptic.has_value());
  CHECK_FALSE(*rep.no_elliptic);
  CHECK(rep.fano_rigid.value_or(false));
}

TEST_CASE("classify family 88: K3 (x0,x1), elliptic (x0,x1,y) over P(1,1,6)") {
  const auto rep = fano::classify(shipped_catalog().at(88));
  REQUIRE(rep.fibrations.size() == 2);
  const auto* k3 = find_kind(rep, FibrationConclusion::Kind::K3);
  REQUIRE(k3);
  CHECK(monomial_strings(rep.family, k3->map_monomials) ==
        std::vector<std::string>{"x0", "x1"});
  const auto* ell = find_kind(rep, FibrationConclusion::Kind::Elliptic);
  REQUIRE(ell);
  CHECK(monomial_strings(rep.family, ell->map_monomials) ==
        std::vector<std::string>{"x0", "x1", "y"});
  CHECK(fano::format_base(ell->base_weights_normalized) == "P(1,1,6)");
  CHECK(rep.fano_rigid.value_or(false));
}

TEST_CASE("classify family 90: K3 ring (x,y), elliptic (x,y,z) over P(1,3,4)") {
  const auto rep = fano::classify(shipped_catalog().at(90));
  const auto* k3 = find_kind(rep, FibrationConclusion::Kind::K3);
  REQUIRE(k3);
  CHECK(monomial_strings(rep.family, k3->ring_generators) ==
        std::vector<std::string>{"x", "y"});
  CHECK(monomial_strings(rep.family, k3->map_monomials) ==
        std::vector<std::string>{"x^3", "y"});
  CHECK(fano::format_base(k3->base_weights_raw) == "P(1,3)");
  CHECK(fano::format_base(k3->base_weights_normalized) == "P^1");
  const auto* ell = find_kind(rep, FibrationConclusion::Kind::Elliptic);
  REQUIRE(ell);
  CHECK(monomial_strings(rep.family, ell->map_monomials) ==
        std::vector<std::string>{"x", "y", "z"});
  CHECK(fano::format_base(ell->base_weights_normalized) == "P(1,3,4)");
  CHECK(rep.fano_rigid.value_or(false));
}

TEST_CASE("classify family 5 draws no fibration conclusions") {
  const auto rep = fano::classify(shipped_catalog().at(5));
  CHECK(rep.fibrations.empty());
  CHECK_FALSE(rep.no_elliptic.has_value());
  CHECK_FALSE(rep.fano_rigid.has_value());
  bool noted = false;
  for (const auto& n : rep.notes)
    if (n.find("not analyzed") != std::string::npos) noted = true;
  CHECK(noted);
}

TEST_CASE("classify a smooth family: empty locus, empty candidate sets") {
  const auto rep = fano::classify(shipped_catalog().at(1));
  CHECK(rep.locus.empty());
  CHECK(rep.cs.candidate_sets.empty());
  CHECK(rep.fibrations.empty());
  const std::string text = fano::emit_report(rep, "text");
  CHECK(text.find("(empty)") != std::string::npos);
  CHECK(text.find("(none)") != std::string::npos);
}

TEST_CASE("classify is deterministic byte for byte") {
  for (int id : {34, 75, 88, 90}) {
    const auto& f = shipped_catalog().at(id);
    const std::string a = fano::emit_report(fano::classify(f), "json");
    const std::string b = fano::emit_report(fano::classify(f), "json");
    REQUIRE(a == b);
    const std::string ta = fano::emit_report(fano::classify(f), "text");
    const std::string tb = fano::emit_report(fano::classify(f), "text");
    REQUIRE(ta == tb);
  }
}

TEST_CASE("JSON report parses and carries the documented table") {
  const auto rep = fano::classify(shipped_catalog().at(75));
  const std::string js = fano::emit_report(rep, "json");
  const auto parsed = nlohmann::json::parse(js);
  CHECK(parsed["schema_version"] == 1);
  CHECK(parsed["family"]["id"] == 75);
  CHECK(parsed["anticanonical_cube"] == "1/60");
  CHECK(parsed["fano_rigidity"] == true);
  CHECK(parsed["no_elliptic_fibration"] == true);
  REQUIRE(parsed["candidate_cs_sets"].size() == 1);
  CHECK(parsed["candidate_cs_sets"][0] ==
        nlohmann::json::array({"Q_1", "Q_2"}));
}

TEST_CASE("family 75 text report shows the documented exclusion table") {
  const std::string text =
      fano::emit_report(fano::classify(shipped_catalog().at(75)), "text");
  CHECK(text.find("10B + E") != std::string::npos);
  CHECK(text.find("5B + E") != std::string::npos);
  CHECK(text.find("4B") != std::string::npos);
  CHECK(text.find("5B + 2E") != std::string::npos);
  CHECK(text.find("{ Q_1, Q_2 }") != std::string::npos);
  CHECK(text.find("no elliptic fibration") != std::string::npos);
}

TEST_CASE("a too-small degree bound raises IncompleteEvidence") {
  CHECK_THROWS_AS(fano::classify(shipped_catalog().at(75), 2),
                  fano::IncompleteEvidence);
  // a generous explicit bound still works
  const auto rep = fano::classify(shipped_catalog().at(75), 60);
  REQUIRE(rep.fibrations.size() == 1);
  CHECK(rep.fibrations[0].degree_bound == 60);
}

TEST_CASE("base weight normalization") {
  CHECK(fano::normalize_base_weights({1, 4}) == std::vector<int>{1, 1});
  CHECK(fano::normalize_base_weights({1, 3}) == std::vector<int>{1, 1});
  CHECK(fano::normalize_base_weights({2, 3}) == std::vector<int>{1, 1});
  CHECK(fano::normalize_base_weights({1, 1, 2}) == std::vector<int>{1, 1, 2});
  CHECK(fano::normalize_base_weights({1, 3, 4}) == std::vector<int>{1, 3, 4});
  CHECK(fano::normalize_base_weights({2, 4, 6}) == std::vector<int>{1, 2, 3});
  CHECK(fano::normalize_base_weights({2, 2, 3}) == std::vector<int>{1, 1, 3});
  CHECK(fano::format_base({1, 1}) == "P^1");
  CHECK(fano::format_base({1, 1, 1}) == "P^2");
  CHECK(fano::format_base({1, 1, 6}) == "P(1,1,6)");
}
