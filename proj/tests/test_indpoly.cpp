#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wlplab/indpoly.hpp"
#include "wlplab/spec_parser.hpp"

using namespace wlplab;

namespace {

IntPolynomial rec(const Graph& g) { return indpoly_rec(g); }
IntPolynomial P(long n) { return n == 0 ? IntPolynomial::one() : rec(path_graph(n)); }
IntPolynomial C(long n) { return rec(cycle_graph(n)); }

}  // namespace

TEST_SUITE("indpoly") {
  TEST_CASE("small examples") {
    CHECK(indpoly_enum(empty_graph(3)) == IntPolynomial{1, 3, 3, 1});
    CHECK(indpoly_enum(complete_graph(4)) == IntPolynomial{1, 4});
    CHECK(indpoly_enum(path_graph(3)) == IntPolynomial{1, 3, 1});
    CHECK(rec(cycle_graph(6)) == IntPolynomial{1, 6, 9, 2});
    CHECK(rec(path_graph(6)) == IntPolynomial{1, 6, 10, 4});
    CHECK(rec(parse_spec("union(complete:2,complete:2)")) == IntPolynomial{1, 4, 4});
    CHECK(rec(Graph(0, {})) == IntPolynomial::one());
  }

  TEST_CASE("closed forms match the mask oracle") {
    for (long n = 1; n <= 18; ++n) CHECK(closed_form(ClosedFormKind::Path, n) == oracle::indpoly_by_masks(path_graph(n)));
    for (long n = 3; n <= 18; ++n) {
      CHECK(closed_form(ClosedFormKind::Cycle, n) == oracle::indpoly_by_masks(cycle_graph(n)));
      CHECK(closed_form(ClosedFormKind::Pan, n) == oracle::indpoly_by_masks(pan_graph(n)));
    }
    for (long n = 4; n <= 18; ++n) CHECK(closed_form(ClosedFormKind::Ce, n) == oracle::indpoly_by_masks(ce_graph(n)));
    CHECK(closed_form(ClosedFormKind::Path, 6).evaluate(1) == 21);
    CHECK(closed_form(ClosedFormKind::Ce, 6) == IntPolynomial{1, 6, 8, 1});
    CHECK(closed_form(ClosedFormKind::Pan, 6) == IntPolynomial{1, 7, 14, 8, 1});
  }

  TEST_CASE("closed form parameter checks") {
    CHECK_THROWS_AS(closed_form(ClosedFormKind::Path, 0), ConstraintError);
    CHECK_THROWS_AS(closed_form(ClosedFormKind::Cycle, 2), ConstraintError);
    CHECK_THROWS_AS(closed_form(ClosedFormKind::Ce, 3), ConstraintError);
    CHECK_THROWS_AS(closed_form(ClosedFormKind::Pan, 2), ConstraintError);
    CHECK_THROWS_AS(closed_form_bk(3, 3), ConstraintError);
  }

  TEST_CASE("recurrence and enumeration agree with the mask oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + rng() % 18;
      const double density = 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0;
      auto g = oracle::random_graph(n, density, rng);
      const auto want = oracle::indpoly_by_masks(g);
      CHECK(indpoly_enum(g) == want);
      CHECK(rec(g) == want);
    }
    for (long n = 1; n <= 14; ++n) {
      CHECK(rec(tadpole3_graph(n)) == oracle::indpoly_by_masks(tadpole3_graph(n)));
      CHECK(rec(complete_graph(n)) == IntPolynomial{1, n});
    }
  }

  TEST_CASE("decomposition identities up to n = 60") {
    for (long n = 3; n <= 60; ++n) CHECK(P(n) == P(n - 1) + P(n - 2).shifted());
    for (long n = 5; n <= 60; ++n) {
      CHECK(C(n) == P(n - 1) + P(n - 3).shifted());
      CHECK(rec(ce_graph(n)) == P(n - 1) + P(n - 4).shifted());
    }
    for (long n = 3; n <= 60; ++n) CHECK(rec(pan_graph(n)) == C(n) + P(n - 1).shifted());
    for (long n = 1; n <= 40; ++n) CHECK(rec(tadpole3_graph(n)) == C(n + 3));
  }

  TEST_CASE("product rule on random pairs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      auto a = oracle::random_graph(1 + rng() % 12, 0.3, rng);
      auto b = oracle::random_graph(1 + rng() % 12, 0.3, rng);
      CHECK(rec(disjoint_union(a, b)) == rec(a) * rec(b));
    }
  }

  TEST_CASE("bk closed form against enumeration") {
    for (long n = 2; n <= 7; ++n)
      for (long m = 1; m < n; ++m) CHECK(closed_form_bk(m, n) == indpoly_enum(bk_graph(m, n)));
  }

  TEST_CASE("mode formula") {
    CHECK(mode_formula(ModeKind::Path, 13) == 4);
    CHECK(mode_formula(ModeKind::Cycle, 12) == 3);
    CHECK(mode_formula(ModeKind::Path, 1) == 0);
    CHECK(mode_formula(ModeKind::Path, 18) == 5);
    CHECK(mode_formula(ModeKind::Cycle, 16) == 5);
    for (long n = 1; n <= 300; ++n) {
      const auto p = closed_form(ClosedFormKind::Path, n);
      CHECK(unimodality_report(p).mode == mode_formula(ModeKind::Path, n));
      if (n >= 3) CHECK(unimodality_report(closed_form(ClosedFormKind::Cycle, n)).mode == mode_formula(ModeKind::Cycle, n));
    }
    CHECK_THROWS_AS(mode_formula(ModeKind::Path, 0), ConstraintError);
    CHECK_THROWS_AS(mode_formula(ModeKind::Cycle, 2), ConstraintError);
  }

  TEST_CASE("unimodality report against the textbook definition") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<long> a(1 + rng() % 7);
      for (auto& x : a) x = 1 + static_cast<long>(rng() % 4);
      const auto r = unimodality_report(IntPolynomial(std::vector<mpz_class>(a.begin(), a.end())));
      CHECK(r.mode == oracle::mode_of(a));
      CHECK(r.is_unimodal == r.mode.has_value());
    }
  }
}
