#include <catch2/catch_amalgamated.hpp>

#include "fano_sieve/catalog.hpp"
#include "test_util.hpp"

using testutil::shipped_catalog;

TEST_CASE("shipped catalog loads and has the anchored rows") {
  const fano::Catalog& cat = shipped_catalog();
  REQUIRE(cat.records.size() == 95);

  const auto& f5 = cat.at(5);
  CHECK(f5.d == 7);
  CHECK(f5.w == fano::make_weights(1, 1, 1, 2, 3));

  const auto& f34 = cat.at(34);
  CHECK(f34.d == 18);
  CHECK(f34.w == fano::make_weights(1, 1, 2, 6, 9));
  CHECK(f34.superrigid);

  const auto& f75 = cat.at(75);
  CHECK(f75.d == 30);
  CHECK(f75.w == fano::make_weights(1, 4, 5, 6, 15));
  CHECK(f75.superrigid);

  const auto& f88 = cat.at(88);
  CHECK(f88.d == 42);
  CHECK(f88.w == fano::make_weights(1, 1, 6, 14, 21));

  const auto& f90 = cat.at(90);
  CHECK(f90.d == 42);
  CHECK(f90.w == fano::make_weights(1, 3, 4, 14, 21));

  CHECK_FALSE(cat.at(5).superrigid);
  CHECK(cat.source_hash != 0);
}

TEST_CASE("every shipped row passes validation") {
  for (const auto& [id, r] : shipped_catalog().records) {
    CAPTURE(id);
    for (const fano::CheckResult& c : fano::validate_record(r)) {
      CAPTURE(c.check, c.detail);
      REQUIRE(c.pass);
    }
    long long sum = r.w[1] + r.w[2] + r.w[3] + r.w[4];
    REQUIRE(r.d == sum);
  }
}

TEST_CASE("single rows parse") {
  const auto cat =
      fano::parse_catalog("75\t30\t1\t4\t5\t6\t15\t1\n", "inline");
  REQUIRE(cat.records.size() == 1);
  CHECK(cat.at(75).w == fano::make_weights(1, 4, 5, 6, 15));

  const auto cat2 =
      fano::parse_catalog("# comment\n34\t18\t1\t1\t2\t6\t9\t1\n", "inline");
  CHECK(cat2.at(34).d == 18);
}

TEST_CASE("bad rows are rejected") {
  // adjunction violated: 30 != 4+5+6+16
  try {
    fano::parse_catalog("99\t30\t1\t4\t5\t6\t16\t0\n", "inline");
    FAIL("expected ValidationError");
  } catch (const fano::ValidationError& e) {
    CHECK(std::string(e.what()).find("adjunction") != std::string::npos);
  }
  CHECK_THROWS_AS(fano::parse_catalog("1\t4\t1\t1\t1\t1\n", "inline"),
                  fano::ParseError);
  CHECK_THROWS_AS(fano::parse_catalog("1\t4\t1\t1\t1\t1\tx\t0\n", "inline"),
                  fano::ParseError);
  CHECK_THROWS_AS(
      fano::parse_catalog("1\t4\t1\t1\t1\t1\t1\t0\n1\t4\t1\t1\t1\t1\t1\t0\n",
                          "inline"),
      fano::ValidationError);
  // non-terminal data: X_6 in P(1,1,1,1,2) has 6 divisible by 2 everywhere
  // but a malformed weight system fails well-formedness
  try {
    fano::parse_catalog("7\t8\t1\t2\t2\t2\t2\t0\n", "inline");
    FAIL("expected ValidationError");
  } catch (const fano::ValidationError& e) {
    CHECK(std::string(e.what()).find("well-formed") != std::string::npos);
  }
}

TEST_CASE("validate_record reports pass per check for the anchored families") {
  for (int id : {5, 34, 75, 88, 90}) {
    const auto checks = fano::validate_record(shipped_catalog().at(id));
    REQUIRE(checks.size() >= 4);
    for (const auto& c : checks) CHECK(c.pass);
  }
}

TEST_CASE("catalog round-trips through serialization") {
  const fano::Catalog& cat = shipped_catalog();
  const fano::Catalog again =
      fano::parse_catalog(fano::serialize_catalog(cat), "roundtrip");
  REQUIRE(again.records == cat.records);
  // serialization itself is stable
  CHECK(fano::serialize_catalog(again) == fano::serialize_catalog(cat));
}
