#include <doctest.h>

#include "wlplab/catalog.hpp"
#include "wlplab/indpoly.hpp"

using namespace wlplab;
using namespace wlplab::catalog;

TEST_SUITE("catalog") {
  TEST_CASE("wlp sets") {
    CHECK(expected_wlp(Kind::Cycle, 17));
    CHECK_FALSE(expected_wlp(Kind::Pan, 11));
    CHECK(expected_wlp(Kind::Tadpole3, 7));
    CHECK(expected_wlp(Kind::Path, 13));
    CHECK_FALSE(expected_wlp(Kind::Path, 8));
    CHECK_THROWS_AS(expected_wlp(Kind::Cycle, 2), NotTabulated);
    CHECK_THROWS_AS(expected_wlp(Kind::Ce, 3), NotTabulated);
  }

  TEST_CASE("failure listings resolve to integer degrees") {
    using F = std::vector<ExpectedFailure>;
    CHECK(expected_failures(Kind::Path, 8) == F{{2, FailureSense::Surjective}});
    CHECK(expected_failures(Kind::Cycle, 16) == F{{4, FailureSense::Injective}});
    CHECK(rho(16) == 5);
    CHECK(expected_failures(Kind::Path, 12) == F{{3, FailureSense::Injective}});
    CHECK(expected_failures(Kind::Path, 13).empty());
    CHECK_THROWS_AS(expected_failures(Kind::Path, 18), NotTabulated);
    CHECK_THROWS_AS(expected_failures(Kind::Cycle, 21), NotTabulated);
  }

  TEST_CASE("listings are empty exactly for wlp members") {
    for (Kind k : {Kind::Path, Kind::Cycle, Kind::Ce, Kind::Pan, Kind::Tadpole3})
      for (long n = min_n(k); n <= max_tabulated_n(k); ++n) {
        CAPTURE(to_string(k));
        CAPTURE(n);
        CHECK(expected_failures(k, n).empty() == expected_wlp(k, n));
      }
  }

  TEST_CASE("asymptotic claims") {
    auto c = asymptotic_surjectivity_claim(Kind::Path, 18);
    CHECK(c.degree == 5);
    CHECK(c.sense == FailureSense::Surjective);
    c = asymptotic_surjectivity_claim(Kind::Cycle, 21);
    CHECK(c.degree == rho(21));
    CHECK_THROWS_AS(asymptotic_surjectivity_claim(Kind::Cycle, 20), NotTabulated);
    auto inj = path_injectivity_claim(16);
    REQUIRE(inj.has_value());
    CHECK(inj->degree == 4);
    CHECK(inj->sense == FailureSense::Injective);
    CHECK_FALSE(path_injectivity_claim(13).has_value());
  }

  TEST_CASE("mode table") {
    const auto& rows = mode_table();
    REQUIRE(rows.size() == 4);
    std::size_t defined = 0, dashes = 0;
    for (const auto& r : rows) {
      CHECK(r.modes.size() == 13);
      for (const auto& m : r.modes) (m ? defined : dashes) += 1;
    }
    CHECK(defined == 45);
    CHECK(dashes == 7);
    CHECK(rows[0].modes[12] == 4u);
    CHECK(rows[1].modes[11] == 3u);
  }

  TEST_CASE("compare reports mismatches") {
    WlpVerdict v;
    v.complete = true;
    v.has_wlp = false;
    DegreeRankRecord r;
    r.k = 2;
    r.h_k = 21;
    r.h_k1 = 20;
    r.rank = 19;
    r.injective_fail = r.surjective_fail = true;
    v.records.resize(2);
    v.records.push_back(r);
    CHECK(compare(entry(Kind::Path, 8), v).ok());
    CHECK_FALSE(compare(entry(Kind::Path, 7), v).ok());
    v.records[2].surjective_fail = false;
    CHECK_FALSE(compare(entry(Kind::Path, 8), v).ok());
  }

  TEST_CASE("json export") {
    const auto j = export_json();
    CHECK(j["families"].size() == 5);
    CHECK(j["mode_table"].size() == 4);
    CHECK(j["families"][0]["kind"] == "path");
    CHECK(j["families"][0]["entries"].size() == 17);
  }
}
