#include <algorithm>  // for max, min_element
#include <cstdint>    // for int64_t
#include <cstdlib>    // for abs
#include <optional>   // for optional
#include <tuple>      // for tuple
#include <utility>    // for pair
#include <vector>     // for vector

#include "doctest.h"

#include "bzf/core.hpp"
#include "bzf/errors.hpp"
#include "bzf/morphisms.hpp"
#include "bzf/verify.hpp"

using namespace bzf;

namespace {

  // Center-out key written independently of the library: 0, -1, 1, -2, 2, ...
  std::int64_t key(std::int64_t v) {
    return v >= 0 ? 2 * v : -2 * v - 1;
  }

  auto pair_key(Element const& x, Element const& y) {
    return std::tuple(key(x.i), key(x.j), x.f, key(y.i), key(y.j), y.f);
  }

  MapFn pseudo_alpha(std::int64_t k) {
    return [k](Element const& x) { return apply_formula(BaseKind::alpha, k, k, x); };
  }

  MapFn pseudo_beta(std::int64_t k) {
    return [k](Element const& x) { return apply_formula(BaseKind::beta, k, 0, x); };
  }

  struct Violation {
    Element x, y, lhs, rhs;
  };

  // Every homomorphism violation over Window(n) whose product stays inside
  // the tabulated domain, with the least one picked by an explicit min.
  std::optional<Violation> least_violation(MapFn const& f, std::int64_t n) {
    std::vector<Element> elements;
    for (std::int64_t i = -n; i <= n; ++i) {
      for (std::int64_t j = -n; j <= n; ++j) {
        elements.push_back({i, j, 0});
        elements.push_back({i, j, 1});
      }
    }
    std::vector<Violation> all;
    for (auto const& x : elements) {
      for (auto const& y : elements) {
        Element const xy = mul(x, y);
        if (std::max(std::abs(xy.i), std::abs(xy.j)) > 3 * n) {
          continue;
        }
        Element const lhs = f(xy);
        Element const rhs = mul(f(x), f(y));
        if (lhs != rhs) {
          all.push_back({x, y, lhs, rhs});
        }
      }
    }
    if (all.empty()) {
      return std::nullopt;
    }
    return *std::min_element(all.begin(), all.end(), [](auto const& a, auto const& b) {
      return pair_key(a.x, a.y) < pair_key(b.x, b.y);
    });
  }

  std::vector<std::pair<Element, Element>> identity_entries(std::int64_t n) {
    std::vector<std::pair<Element, Element>> out;
    for (auto const& x : Window(n).elements()) {
      out.emplace_back(x, x);
    }
    return out;
  }

}  // namespace

TEST_CASE("MapTable validation") {
  auto entries = identity_entries(2);
  CHECK(MapTable(2, entries).size() == 50);

  SUBCASE("missing key") {
    entries.pop_back();
    CHECK_THROWS_AS(MapTable(2, entries), MalformedInput);
  }
  SUBCASE("duplicate key") {
    entries.push_back(entries.front());
    CHECK_THROWS_AS(MapTable(2, entries), MalformedInput);
  }
  SUBCASE("tail outside the family") {
    entries.push_back({{9, 9, 2}, {0, 0, 0}});
    CHECK_THROWS_AS(MapTable(2, entries), MalformedInput);
    entries.back() = {{9, 9, 0}, {0, 0, 3}};
    CHECK_THROWS_AS(MapTable(2, entries), MalformedInput);
  }
  SUBCASE("lookup") {
    MapTable const m(2, entries);
    CHECK(m.at({1, -2, 1}) == Element{1, -2, 1});
    CHECK(m.find({5, 0, 0}) == nullptr);
    CHECK_THROWS_AS(m.at({5, 0, 0}), MalformedInput);
  }
  SUBCASE("tabulate covers the product window") {
    auto const m = tabulate(CanonicalEndo{}, 2);
    CHECK(m.n() == 2);
    CHECK(m.size() == Window(6).size());
  }
}

TEST_CASE("check_homomorphism") {
  SUBCASE("valid endomorphisms pass") {
    auto const alpha = check_homomorphism(tabulate(CanonicalEndo{make_alpha(2, 1), 0}, 4));
    CHECK(alpha.passed());
    CHECK(alpha.checks + alpha.skipped == 162u * 162u);
    CHECK(check_homomorphism(tabulate(CanonicalEndo{}, 4)).passed());
    CHECK(check_homomorphism(tabulate(CanonicalEndo{make_beta(3, 2), -3}, 4)).passed());
  }

  SUBCASE("pseudo-alpha with p = k fails at the least violation") {
    for (std::int64_t k = 1; k <= 3; ++k) {
      auto const report   = check_homomorphism(tabulate(pseudo_alpha(k), 4));
      auto const expected = least_violation(pseudo_alpha(k), 4);
      REQUIRE(expected.has_value());
      REQUIRE_FALSE(report.passed());
      auto const& c = *report.counterexample;
      CHECK(c.kind == FailureKind::homomorphism);
      CHECK(c.x == expected->x);
      CHECK(c.y == expected->y);
      CHECK(c.lhs == expected->lhs);
      CHECK(c.rhs == expected->rhs);
    }
  }

  SUBCASE("the pair (0,1,[0)), (0,0,[1)) witnesses pseudo-alpha(2, 2)") {
    auto const  f = pseudo_alpha(2);
    Element const x{0, 1, 0};
    Element const y{0, 0, 1};
    CHECK(f(mul(x, y)) == Element{0, 2, 0});
    CHECK(mul(f(x), f(y)) == Element{0, 2, 1});
  }

  SUBCASE("the least violation of pseudo-alpha(2, 2) in scan order") {
    auto const c = *check_homomorphism(tabulate(pseudo_alpha(2), 4)).counterexample;
    CHECK(c.x == Element{0, 0, 0});
    CHECK(c.y == Element{-1, 0, 1});
    CHECK(c.lhs == Element{0, 2, 0});
    CHECK(c.rhs == Element{0, 2, 1});
  }

  SUBCASE("identical across thread counts") {
    auto const table = tabulate(pseudo_alpha(3), 4);
    auto const one   = check_homomorphism(table, {1, {}});
    for (unsigned threads : {2u, 3u, 7u, 0u}) {
      auto const many = check_homomorphism(table, {threads, {}});
      CHECK(many.checks == one.checks);
      CHECK(many.skipped == one.skipped);
      CHECK(many.counterexample->x == one.counterexample->x);
      CHECK(many.counterexample->y == one.counterexample->y);
    }
  }

  SUBCASE("a table of exactly Window(n) is rejected as vacuous") {
    CHECK_THROWS_AS(check_homomorphism(MapTable(4, identity_entries(4))), InsufficientDomain);
  }

  SUBCASE("a custom product is honoured") {
    CheckOptions opts;
    opts.mul = [](Element const& x, Element const& y) {
      Element r = mul(x, y);
      r.f       = 0;
      return r;
    };
    auto const report = check_homomorphism(tabulate(CanonicalEndo{EndoBase(), 1}, 2), opts);
    CHECK_FALSE(report.passed());
  }
}

TEST_CASE("check_injective") {
  CHECK(check_injective(tabulate(CanonicalEndo{make_beta(2, 1), 0}, 4)).passed());
  CHECK(check_injective(tabulate(CanonicalEndo{make_alpha(3, 2), 5}, 4)).passed());

  auto const constant = check_injective(
      tabulate([](Element const&) { return Element{0, 0, 0}; }, 2));
  REQUIRE_FALSE(constant.passed());
  CHECK(constant.counterexample->x == Element{0, 0, 0});
  CHECK(constant.counterexample->y == Element{0, 0, 1});

  for (std::int64_t k = 2; k <= 3; ++k) {
    auto const report = check_injective(tabulate(pseudo_beta(k), 4));
    REQUIRE_FALSE(report.passed());
    auto const& c = *report.counterexample;
    CHECK(c.kind == FailureKind::injectivity);
    CHECK(c.x == Element{0, 0, 0});
    CHECK(c.y == Element{0, 0, 1});
    CHECK(c.lhs == Element{0, 0, 0});
  }

  SUBCASE("least collision among several") {
    // Collapses (i, j, f) to (i, j, 0), so the first collision is at the origin
    // and a collision with larger coordinates must not win.
    auto const r = check_injective(
        tabulate([](Element const& x) { return Element{x.i, x.j, 0}; }, 3));
    CHECK(r.counterexample->x == Element{0, 0, 0});
    CHECK(r.counterexample->y == Element{0, 0, 1});
  }
}

TEST_CASE("classify") {
  SUBCASE("round trip") {
    for (CanonicalEndo const e : {CanonicalEndo{make_alpha(2, 1), 3},
                                  CanonicalEndo{},
                                  CanonicalEndo{make_beta(4, 3), -10},
                                  CanonicalEndo{make_alpha(5, 0), 7},
                                  CanonicalEndo{make_beta(2, 1), -1}}) {
      auto const r = classify(tabulate(e, 6));
      REQUIRE(r.endo.has_value());
      CHECK(*r.endo == e);
      CHECK(r.report.passed());
    }
  }

  SUBCASE("non-diagonal origin fails at the first probe") {
    auto const r = classify(tabulate([](Element const& x) { return Element{x.i, x.j + 1, x.f}; }, 3));
    CHECK_FALSE(r.endo);
    REQUIRE(r.report.counterexample);
    CHECK(r.report.counterexample->stage == "origin");
    CHECK(r.report.counterexample->x == Element{0, 0, 0});
    CHECK(r.report.counterexample->rhs == Element{0, 1, 0});
  }

  SUBCASE("collapsing beta fails at the injectivity pre-scan") {
    auto const r = classify(tabulate(pseudo_beta(2), 4));
    CHECK_FALSE(r.endo);
    CHECK(r.report.counterexample->stage == "injectivity");
  }

  SUBCASE("bad scale") {
    // Transposition (i, j, f) -> (j, i, f) fixes the origin, is injective,
    // but sends (0, 1, [0)) to (1, 0, [0)).
    auto const r = classify(tabulate([](Element const& x) { return Element{x.j, x.i, x.f}; }, 3));
    CHECK(r.report.counterexample->stage == "scale");
    CHECK(r.report.counterexample->rhs == Element{1, 0, 0});
  }

  SUBCASE("bad tail") {
    auto const r = classify(tabulate(pseudo_alpha(2), 3));
    CHECK(r.report.counterexample->stage == "tail");
    CHECK(r.report.counterexample->rhs == Element{2, 2, 1});
  }

  SUBCASE("disagreement away from the probes") {
    auto const r = classify(tabulate(
        [](Element const& x) {
          Element y = apply(CanonicalEndo{make_alpha(2, 1), 0}, x);
          if (x == Element{-2, 1, 1}) {
            y.i += 1000;
          }
          return y;
        },
        3));
    CHECK_FALSE(r.endo);
    REQUIRE(r.report.counterexample);
    CHECK(r.report.counterexample->stage == "verify");
    CHECK(r.report.counterexample->x == Element{-2, 1, 1});
  }

  CHECK_THROWS_AS(classify(tabulate(CanonicalEndo{}, 1)), InsufficientDomain);
}

TEST_CASE("corner_diagram_check") {
  auto const a = corner_diagram_check(make_alpha(2, 1), 1, 4);
  CHECK(a.passed());
  CHECK(a.checks == 72);
  CHECK(a.skipped == 162 - 72);
  CHECK(corner_iso_inv(apply_base(make_alpha(2, 1), corner_iso({-1, 0, 1}, 1)), 1)
        == Element{0, 2, 1});

  CHECK(corner_diagram_check(make_beta(2, 1), 2, 4).passed());
  CHECK(corner_iso_inv(apply_base(make_beta(2, 1), corner_iso({-2, -2, 1}, 2)), 2)
        == Element{-1, -1, 0});

  for (std::int64_t k = 1; k <= 4; ++k) {
    CHECK(corner_diagram_check(make_alpha(k, k - 1), 0, 4).passed());
  }
}

TEST_CASE("Report") {
  Report r;
  r.name = "outer";
  CHECK(r.passed());
  Report sub;
  sub.name   = "inner";
  sub.checks = 5;
  sub.fail(Counterexample{FailureKind::law, {1, 1, 0}, {}, {}, {}, {}, ""});
  r.absorb(sub);
  CHECK_FALSE(r.passed());
  CHECK(r.checks == 5);
  CHECK(r.subreports.size() == 1);
  CHECK(r.summary().find("outer") != std::string::npos);
  CHECK(to_string(FailureKind::homomorphism) == "homomorphism");
  CHECK(detail::resolve_threads(3) == 3);
  CHECK(detail::resolve_threads(0) >= 1);
}
