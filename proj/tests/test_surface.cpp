#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "fano_sieve/surface.hpp"

using fano::CurveConfig;
using fano::HJChain;
using fano::Rational;

TEST_CASE("Hirzebruch-Jung expansions") {
  CHECK(fano::hj_resolve(5, 1).entries == std::vector<int>{5});
  CHECK(fano::hj_resolve(3, 2).entries == std::vector<int>{2, 2});
  CHECK(fano::hj_resolve(2, 1).entries == std::vector<int>{2});
  CHECK(fano::hj_resolve(5, 4).entries == std::vector<int>{2, 2, 2, 2});
  CHECK(fano::hj_resolve(12, 5).entries == std::vector<int>{3, 2, 3});
  CHECK_THROWS_AS(fano::hj_resolve(4, 2), fano::Error);
  CHECK_THROWS_AS(fano::hj_resolve(1, 1), fano::Error);
}

TEST_CASE("continued fraction round-trips for r <= 50") {
  for (int r = 2; r <= 50; ++r)
    for (int a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      const HJChain chain = fano::hj_resolve(r, a);
      for (int b : chain.entries) REQUIRE(b >= 2);
      REQUIRE(fano::hj_evaluate(chain) == Rational(r, a));
    }
}

TEST_CASE("strict transform through the family-75 fiber chains") {
  // inputs are the triple products 4B^3 and 12B^3 at the 1/5(1,4,1) point
  const auto [c2, kc] = fano::strict_transform_numbers(
      Rational(-2, 15), Rational(-2, 5),
      {{fano::hj_resolve(3, 2), {0, 1}}, {fano::hj_resolve(5, 1), {1}}});
  CHECK(c2 == -1);
  CHECK(kc == -1);
  // integrality despite rational intermediates
  CHECK(denominator(c2) == 1);
  CHECK(denominator(kc) == 1);
}

TEST_CASE("strict transform trivial cases") {
  const auto [c2, kc] =
      fano::strict_transform_numbers(Rational(-2, 15), Rational(-2, 5), {});
  CHECK(c2 == Rational(-2, 15));
  CHECK(kc == Rational(-2, 5));
  const auto [z2, zk] = fano::strict_transform_numbers(0, -2, {});
  CHECK(z2 == 0);
  CHECK(zk == -2);
  CHECK_THROWS_AS(fano::strict_transform_numbers(
                      0, 0, {{fano::hj_resolve(3, 2), {1}}}),
                  fano::Error);  // pattern length mismatch
}

TEST_CASE("blow down of the (2,2,1,5) chain") {
  CurveConfig cfg = fano::chain_config({-2, -2, -1, -5});
  cfg = fano::blow_down(cfg, 2);
  CHECK(cfg.self_int == std::vector<int>{-2, -1, -4});
  cfg = fano::blow_down(cfg, 1);
  CHECK(cfg.self_int == std::vector<int>{-1, -3});
  cfg = fano::blow_down(cfg, 0);
  CHECK(cfg.self_int == std::vector<int>{-2});
  CHECK_THROWS_AS(fano::blow_down(cfg, 0), fano::NotMinusOne);
}

TEST_CASE("blow down keeps the matrix symmetric and drops one curve") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> si(-5, -1), inc(0, 2), n_curves(2, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = n_curves(rng);
    CurveConfig cfg;
    cfg.self_int.resize(n);
    for (int i = 0; i < n; ++i) cfg.self_int[i] = si(rng);
    cfg.self_int[0] = -1;  // guarantee a contractible curve
    cfg.incidence.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        cfg.incidence[i][j] = cfg.incidence[j][i] = inc(rng);
    const CurveConfig out = fano::blow_down(cfg, 0);
    REQUIRE(out.size() == cfg.size() - 1);
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = 0; j < out.size(); ++j)
        REQUIRE(out.incidence[i][j] == out.incidence[j][i]);
  }
}

TEST_CASE("minimal model run reproduces the four-stage contraction") {
  const auto res = fano::run_mmp(fano::chain_config({-2, -2, -1, -5}));
  REQUIRE(res.trace.size() == 3);
  CHECK(res.trace[0] == std::vector<int>{-2, -1, -4});
  CHECK(res.trace[1] == std::vector<int>{-1, -3});
  CHECK(res.trace[2] == std::vector<int>{-2});
  CHECK(res.final_config.self_int == std::vector<int>{-2});

  const auto ade = fano::du_val_type(res.final_config);
  REQUIRE(ade);
  CHECK(fano::format_ade(*ade) == "A1");

  const auto noop = fano::run_mmp(fano::chain_config({-2}));
  CHECK(noop.trace.empty());
  CHECK(noop.final_config.self_int == std::vector<int>{-2});

  const auto gone = fano::run_mmp(fano::chain_config({-1}));
  REQUIRE(gone.trace.size() == 1);
  CHECK(gone.final_config.size() == 0);
}

TEST_CASE("Du Val typing") {
  auto type_of = [](const CurveConfig& cfg) {
    const auto t = fano::du_val_type(cfg);
    return t ? fano::format_ade(*t) : std::string("NotDuVal");
  };
  CHECK(type_of(fano::chain_config({-2})) == "A1");
  CHECK(type_of(fano::chain_config({-2, -2})) == "A2");
  CHECK(type_of(fano::chain_config({-3})) == "NotDuVal");
  CHECK(type_of(fano::chain_config({-2, -2, -2, -2, -2})) == "A5");

  auto star = [](int arms, const std::vector<int>& lens) {
    // center node 0, arms appended in order
    int n = 1;
    for (int l : lens) n += l;
    CurveConfig cfg;
    cfg.self_int.assign(n, -2);
    cfg.incidence.assign(n, std::vector<int>(n, 0));
    int next = 1;
    for (int a = 0; a < arms; ++a) {
      int prev = 0;
      for (int k = 0; k < lens[static_cast<size_t>(a)]; ++k) {
        cfg.incidence[prev][next] = cfg.incidence[next][prev] = 1;
        prev = next++;
      }
    }
    return cfg;
  };
  CHECK(type_of(star(3, {1, 1, 1})) == "D4");
  CHECK(type_of(star(3, {1, 1, 2})) == "D5");
  CHECK(type_of(star(3, {1, 2, 2})) == "E6");
  CHECK(type_of(star(3, {1, 2, 3})) == "E7");
  CHECK(type_of(star(3, {1, 2, 4})) == "E8");
  CHECK(type_of(star(3, {1, 2, 5})) == "NotDuVal");
  CHECK(type_of(star(3, {2, 2, 2})) == "NotDuVal");

  // cycle of three -2 curves is not Du Val
  CurveConfig cyc;
  cyc.self_int = {-2, -2, -2};
  cyc.incidence = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  CHECK(type_of(cyc) == "NotDuVal");

  // disconnected pair
  CurveConfig disc;
  disc.self_int = {-2, -2};
  disc.incidence = {{0, 0}, {0, 0}};
  CHECK(type_of(disc) == "NotDuVal");
}

TEST_CASE("Newton polygon interior points") {
  const auto [c1, pts1] = fano::newton_interior_points(18, {1, 6, 9});
  CHECK(c1 == 1);
  REQUIRE(pts1.size() == 1);
  CHECK(pts1[0] == std::array<int, 3>{3, 1, 1});

  const auto [c2, pts2] = fano::newton_interior_points(3, {1, 1, 1});
  CHECK(c2 == 1);
  CHECK(pts2[0] == std::array<int, 3>{1, 1, 1});

  const auto [c3, pts3] = fano::newton_interior_points(2, {1, 1, 1});
  CHECK(c3 == 0);
  CHECK(pts3.empty());

  const auto [c4, pts4] = fano::newton_interior_points(42, {1, 6, 14});
  CHECK(c4 == 6);

  CHECK_THROWS_AS(fano::newton_interior_points(1, {2, 3, 4}),
                  fano::EmptyPolygon);
  CHECK_THROWS_AS(fano::newton_interior_points(5, {0, 1, 1}), fano::Error);
}

TEST_CASE("adjunction degrees") {
  CHECK(fano::adjunction_check(18, {1, 2, 6, 9}) == 0);
  CHECK(fano::adjunction_check(42, {1, 6, 14, 21}) == 0);
  CHECK(fano::adjunction_check(30, {1, 4, 5, 6, 15}) == -1);
}
