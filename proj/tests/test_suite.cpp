#include <cstdint>  // for int64_t
#include <set>      // for set
#include <string>   // for string

#include "doctest.h"

#include "bzf/errors.hpp"
#include "bzf/suite.hpp"

using namespace bzf;

namespace {

  // Sub-reports of the rejection checks fail by design, so only the first
  // level is inspected.
  bool all_passed(Report const& r) {
    if (!r.passed()) {
      return false;
    }
    for (auto const& s : r.subreports) {
      if (!s.passed()) {
        return false;
      }
    }
    return true;
  }

  Report const* first_failure(Report const& r) {
    for (auto const& s : r.subreports) {
      if (!s.passed()) {
        return &s;
      }
    }
    return nullptr;
  }

}  // namespace

TEST_CASE("Rng") {
  Rng a(7), b(7), c(8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    auto const x = a.uniform(-5, 5);
    REQUIRE(x == b.uniform(-5, 5));
    REQUIRE(x >= -5);
    REQUIRE(x <= 5);
    differs |= x != c.uniform(-5, 5);
  }
  CHECK(differs);

  std::set<std::int64_t> seen;
  for (int i = 0; i < 200; ++i) {
    seen.insert(a.uniform(0, 3));
  }
  CHECK(seen == std::set<std::int64_t>{0, 1, 2, 3});
  CHECK(a.uniform(4, 4) == 4);
}

TEST_CASE("random_endo respects its bounds") {
  Rng  rng(1);
  bool saw_beta = false;
  for (int i = 0; i < 300; ++i) {
    auto const e = random_endo(rng, 4, 6);
    REQUIRE(e.base.k() <= 4);
    REQUIRE(e.twist >= -6);
    REQUIRE(e.twist <= 6);
    saw_beta |= e.base.kind() == BaseKind::beta;
  }
  CHECK(saw_beta);
  CHECK(all_bases(BaseKind::alpha, 3).size() == 6);
  CHECK(all_bases(BaseKind::beta, 3).size() == 3);
}

TEST_CASE("individual laws") {
  CHECK(laws::associativity(2).passed());
  CHECK(laws::branch_agreement(3).passed());
  CHECK(laws::inverse_laws(3).passed());
  CHECK(laws::idempotents(3).passed());
  CHECK(laws::tail_closure(validate_family({2, 3, 4}), 3).passed());
  CHECK(laws::order_equivalence(2, 4).passed());
  CHECK(laws::order_axioms(2).passed());
  CHECK(laws::corner_morphism(2, 2).passed());
  CHECK(laws::pseudo_alpha_rejected(3, 3).passed());
  CHECK(laws::pseudo_beta_rejected(3, 3).passed());
  CHECK(laws::twist_laws(3, 2).passed());
  CHECK(laws::family_closure(6, 4).passed());
  CHECK(laws::corner_diagrams(3, 2, 3).passed());
}

TEST_CASE("theorem_suite") {
  SUBCASE("minimal configuration") {
    SuiteOptions opts;
    opts.n      = 2;
    opts.kmax   = 2;
    opts.trials = 1;
    opts.seed   = 0;
    CHECK(all_passed(theorem_suite(opts)));
  }
  SUBCASE("default configuration") {
    auto const report = theorem_suite({});
    CHECK(all_passed(report));
    CHECK(report.subreports.size() == 20);
    CHECK(report.subreports.front().name == "associativity");
  }
  SUBCASE("a corrupted product fails at associativity first") {
    SuiteOptions opts;
    opts.n      = 2;
    opts.kmax   = 2;
    opts.trials = 1;
    opts.mul    = [](Element const& x, Element const& y) {
      Element r = mul(x, y);
      if (x.f == 1 && y.f == 1) {
        r.f = 0;
      }
      return r;
    };
    auto const  report = theorem_suite(opts);
    auto const* first  = first_failure(report);
    CHECK_FALSE(report.passed());
    REQUIRE(first != nullptr);
    CHECK(first->name == "associativity");
    REQUIRE(first->counterexample);
    CHECK(first->counterexample->kind == FailureKind::associativity);
  }
  SUBCASE("bad options") {
    SuiteOptions opts;
    opts.n = 1;
    CHECK_THROWS_AS(theorem_suite(opts), MalformedInput);
    opts.n    = 2;
    opts.kmax = 1;
    CHECK_THROWS_AS(theorem_suite(opts), MalformedInput);
    opts.kmax   = 2;
    opts.trials = -1;
    CHECK_THROWS_AS(theorem_suite(opts), MalformedInput);
  }
}
