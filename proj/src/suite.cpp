#include "bzf/suite.hpp"

#include <algorithm>  // for min, max
#include <limits>     // for numeric_limits
#include <stdexcept>  // for logic_error

#include "bzf/checked.hpp"
#include "bzf/errors.hpp"
#include "bzf/parallel.hpp"

namespace bzf {

  std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
      throw MalformedInput("empty range for Rng::uniform");
    }
    std::uint64_t const span
        = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) {
      return static_cast<std::int64_t>(_engine());
    }
    std::uint64_t const range = span + 1;
    std::uint64_t const limit
        = std::numeric_limits<std::uint64_t>::max()
          - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do {
      draw = _engine();
    } while (draw >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo)
                                     + draw % range);
  }

  CanonicalEndo random_endo(Rng& rng, std::int64_t kmax, std::int64_t max_twist) {
    if (kmax < 1 || max_twist < 0) {
      throw MalformedInput("random_endo needs kmax >= 1 and max_twist >= 0");
    }
    bool const    beta = kmax >= 2 && rng.uniform(0, 1) == 1;
    EndoBase      base;
    if (beta) {
      std::int64_t const k = rng.uniform(2, kmax);
      base                 = make_beta(k, rng.uniform(1, k - 1));
    } else {
      std::int64_t const k = rng.uniform(1, kmax);
      base                 = make_alpha(k, rng.uniform(0, k - 1));
    }
    return {base, rng.uniform(-max_twist, max_twist)};
  }

  std::vector<EndoBase> all_bases(BaseKind kind, std::int64_t kmax) {
    std::vector<EndoBase> result;
    if (kind == BaseKind::alpha) {
      for (std::int64_t k = 1; k <= kmax; ++k) {
        for (std::int64_t p = 0; p < k; ++p) {
          result.push_back(make_alpha(k, p));
        }
      }
    } else {
      for (std::int64_t k = 2; k <= kmax; ++k) {
        for (std::int64_t p = 1; p < k; ++p) {
          result.push_back(make_beta(k, p));
        }
      }
    }
    return result;
  }

  namespace laws {

    namespace {
      MulFn resolve_mul(CheckOptions const& opts) {
        if (opts.mul) {
          return opts.mul;
        }
        return [](Element const& x, Element const& y) { return mul(x, y); };
      }

      Counterexample law_failure(std::string            law,
                                 Element                x,
                                 std::optional<Element> y   = std::nullopt,
                                 std::optional<Element> lhs = std::nullopt,
                                 std::optional<Element> rhs = std::nullopt) {
        return Counterexample{
            FailureKind::law, x, y, std::nullopt, lhs, rhs, std::move(law)};
      }
    }  // namespace

    Report associativity(std::int64_t n, CheckOptions const& opts) {
      MulFn const    m        = resolve_mul(opts);
      auto const     elements = Window(n).elements();
      unsigned const threads  = detail::resolve_threads(opts.threads);
      std::size_t const count = elements.size();
      std::vector<std::optional<Counterexample>> first(threads);

      detail::for_each_chunk(
          count, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
            for (std::size_t a = begin; a < end && !first[w]; ++a) {
              Element const& x = elements[a];
              for (std::size_t b = 0; b < count && !first[w]; ++b) {
                Element const& y  = elements[b];
                Element const  xy = m(x, y);
                for (std::size_t c = 0; c < count; ++c) {
                  Element const& z   = elements[c];
                  Element const  lhs = m(xy, z);
                  Element const  rhs = m(x, m(y, z));
                  if (lhs != rhs) {
                    first[w] = Counterexample{
                        FailureKind::associativity, x, y, z, lhs, rhs, ""};
                    break;
                  }
                }
              }
            }
          });

      Report report;
      report.name   = "associativity";
      report.checks = static_cast<std::uint64_t>(count) * count * count;
      for (auto& c : first) {
        if (c) {
          report.fail(std::move(*c));
          break;
        }
      }
      return report;
    }

    Report branch_agreement(std::int64_t n) {
      Report report;
      report.name         = "branch-agreement";
      auto const elements = Window(n).elements();
      auto const& family  = Family::two();
      for (auto const& x : elements) {
        for (auto const& y : elements) {
          if (x.j != y.i) {
            continue;
          }
          ++report.checks;
          Element const lo = detail::mul_lower(family, x, y);
          Element const hi = detail::mul_upper(family, x, y);
          if (lo != hi) {
            report.fail(law_failure("branch-agreement", x, y, lo, hi));
            return report;
          }
        }
      }
      return report;
    }

    Report inverse_laws(std::int64_t n, CheckOptions const& opts) {
      MulFn const m = resolve_mul(opts);
      Report      report;
      report.name         = "inverse-laws";
      auto const elements = Window(n).elements();
      for (auto const& x : elements) {
        Element const inv = invert(x);
        ++report.checks;
        if (m(m(x, inv), x) != x) {
          report.fail(law_failure("x x' x = x", x, inv, m(m(x, inv), x), x));
          return report;
        }
        if (m(m(inv, x), inv) != inv) {
          report.fail(law_failure("x' x x' = x'", x, inv, m(m(inv, x), inv), inv));
          return report;
        }
        for (auto const& y : elements) {
          if (y == inv) {
            continue;
          }
          ++report.checks;
          if (m(m(x, y), x) == x && m(m(y, x), y) == y) {
            report.fail(law_failure("unique inverse", x, y));
            return report;
          }
        }
      }
      return report;
    }

    Report idempotents(std::int64_t n) {
      Report report;
      report.name = "idempotents";
      for (auto const& x : Window(n).elements()) {
        ++report.checks;
        if (is_idempotent(x) != (x.i == x.j)) {
          report.fail(law_failure("idempotent iff i = j", x, std::nullopt, mul(x, x)));
          return report;
        }
      }
      return report;
    }

    Report tail_closure(Family const& family, std::int64_t n) {
      Report report;
      report.name = "tail-closure {";
      for (std::size_t k = 0; k < family.size(); ++k) {
        report.name += (k == 0 ? "" : ",") + std::to_string(family.starts()[k]);
      }
      report.name += "}";
      auto const elements = Window(n, family.size()).elements();
      for (auto const& x : elements) {
        for (auto const& y : elements) {
          ++report.checks;
          try {
            Element const xy = mul(family, x, y);
            if (xy.f >= family.size()) {
              report.fail(law_failure("tail closure", x, y, xy));
              return report;
            }
          } catch (std::logic_error const& e) {
            report.fail(law_failure("tail closure", x, y));
            report.note = e.what();
            return report;
          }
        }
      }
      return report;
    }

    Report order_equivalence(std::int64_t n, std::int64_t search_n) {
      Report report;
      report.name = "order-equivalence";
      std::vector<Element> idempotent_pool;
      for (auto const& e : Window(search_n).elements()) {
        if (is_idempotent(e)) {
          idempotent_pool.push_back(e);
        }
      }
      auto const elements = Window(n).elements();
      for (auto const& x : elements) {
        for (auto const& y : elements) {
          ++report.checks;
          bool witnessed = false;
          for (auto const& e : idempotent_pool) {
            if (mul(y, e) == x) {
              witnessed = true;
              break;
            }
          }
          if (nat_leq(x, y) != witnessed) {
            report.fail(law_failure("nat_leq vs idempotent search", x, y));
            return report;
          }
        }
      }
      return report;
    }

    Report order_axioms(std::int64_t n) {
      Report report;
      report.name           = "order-axioms";
      auto const  elements  = Window(n).elements();
      std::size_t const count = elements.size();
      std::vector<char> leq(count * count);
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
          leq[a * count + b] = nat_leq(elements[a], elements[b]) ? 1 : 0;
        }
      }
      for (std::size_t a = 0; a < count; ++a) {
        ++report.checks;
        if (!leq[a * count + a]) {
          report.fail(law_failure("reflexivity", elements[a]));
          return report;
        }
        for (std::size_t b = 0; b < count; ++b) {
          ++report.checks;
          if (a != b && leq[a * count + b] && leq[b * count + a]) {
            report.fail(law_failure("antisymmetry", elements[a], elements[b]));
            return report;
          }
          if (!leq[a * count + b]) {
            continue;
          }
          for (std::size_t c = 0; c < count; ++c) {
            ++report.checks;
            if (leq[b * count + c] && !leq[a * count + c]) {
              report.fail(Counterexample{FailureKind::law,
                                         elements[a],
                                         elements[b],
                                         elements[c],
                                         std::nullopt,
                                         std::nullopt,
                                         "transitivity"});
              return report;
            }
          }
        }
      }
      return report;
    }

    Report corner_morphism(std::int64_t n, std::int64_t max_corner) {
      Report report;
      report.name         = "corner-morphism";
      auto const elements = Window(n).elements();
      for (std::int64_t c = 0; c <= max_corner; ++c) {
        std::vector<Element> corner;
        for (auto const& x : elements) {
          if (in_corner(x, c)) {
            corner.push_back(x);
          }
        }
        for (auto const& x : corner) {
          for (auto const& y : corner) {
            ++report.checks;
            Element const xy = mul(x, y);
            if (!in_corner(xy, c)) {
              report.fail(law_failure("corner closed under products", x, y, xy));
              return report;
            }
            Element const lhs = corner_iso(xy, c);
            Element const rhs = mul(corner_iso(x, c), corner_iso(y, c));
            if (lhs != rhs) {
              report.fail(law_failure("corner_iso respects products", x, y, lhs, rhs));
              return report;
            }
            if (corner_iso_inv(lhs, c) != xy) {
              report.fail(law_failure("corner_iso round trip", xy, std::nullopt,
                                      corner_iso_inv(lhs, c), xy));
              return report;
            }
          }
        }
      }
      return report;
    }

    Report base_soundness(BaseKind            kind,
                          std::int64_t        kmax,
                          std::int64_t        tmin,
                          std::int64_t        tmax,
                          std::int64_t        n,
                          CheckOptions const& opts) {
      Report report;
      report.name = to_string(kind) + "-soundness";
      for (auto const& base : all_bases(kind, kmax)) {
        for (std::int64_t t = tmin; t <= tmax; ++t) {
          CanonicalEndo const e{base, t};
          auto const          table = tabulate(e, n);
          for (auto sub : {check_homomorphism(table, opts), check_injective(table, opts)}) {
            sub.name = to_string(e) + " " + sub.name;
            if (sub.passed()) {
              report.checks += sub.checks;
            } else {
              report.absorb(std::move(sub));
            }
          }
        }
      }
      return report;
    }

    Report pseudo_alpha_rejected(std::int64_t kmax, std::int64_t n, CheckOptions const& opts) {
      Report report;
      report.name = "pseudo-alpha-rejected";
      for (std::int64_t k = 1; k <= kmax; ++k) {
        auto const table = tabulate(
            [k](Element const& x) { return apply_formula(BaseKind::alpha, k, k, x); },
            n);
        auto sub = check_homomorphism(table, opts);
        sub.name = "pseudo alpha(" + std::to_string(k) + ", " + std::to_string(k) + ")";
        report.checks += 1;
        if (sub.passed()) {
          report.fail(sub.name + " passed the homomorphism check");
        }
        report.subreports.push_back(std::move(sub));
      }
      return report;
    }

    Report pseudo_beta_rejected(std::int64_t kmax, std::int64_t n, CheckOptions const& opts) {
      Report report;
      report.name = "pseudo-beta-rejected";
      for (std::int64_t k = 2; k <= kmax; ++k) {
        auto const table = tabulate(
            [k](Element const& x) { return apply_formula(BaseKind::beta, k, 0, x); },
            n);
        auto sub = check_injective(table, opts);
        sub.name = "pseudo beta(" + std::to_string(k) + ", 0)";
        report.checks += 1;
        if (sub.passed()) {
          report.fail(sub.name + " passed the injectivity check");
        }
        report.subreports.push_back(std::move(sub));
      }
      return report;
    }

    Report twist_laws(std::int64_t n, std::int64_t tbound) {
      Report report;
      report.name         = "twist-laws";
      auto const elements = Window(n).elements();
      for (auto const& x : elements) {
        ++report.checks;
        Element const shifted{x.i + 1, x.j + 1, x.f};
        if (apply_aut(2, x) != shifted) {
          report.fail(law_failure("a^2 = h_1", x, std::nullopt, apply_aut(2, x), shifted));
          return report;
        }
        if (apply_aut(1, apply_aut(1, x)) != shifted) {
          report.fail(law_failure("a a = h_1", x, std::nullopt,
                                  apply_aut(1, apply_aut(1, x)), shifted));
          return report;
        }
      }
      for (std::int64_t t1 = -tbound; t1 <= tbound; ++t1) {
        for (std::int64_t t2 = -tbound; t2 <= tbound; ++t2) {
          CanonicalEndo const a1{EndoBase(), t1};
          CanonicalEndo const inv = invert_automorphism(a1);
          for (auto const& x : elements) {
            ++report.checks;
            Element const lhs = apply_aut(t1, apply_aut(t2, x));
            Element const rhs = apply_aut(t1 + t2, x);
            if (lhs != rhs) {
              report.fail(law_failure("a^t1 a^t2 = a^(t1+t2), t1=" + std::to_string(t1)
                                          + " t2=" + std::to_string(t2),
                                      x, std::nullopt, lhs, rhs));
              return report;
            }
            if (apply(inv, apply(a1, x)) != x) {
              report.fail(law_failure("automorphism inverse, t=" + std::to_string(t1), x));
              return report;
            }
          }
        }
      }
      return report;
    }

    Report decomposition(std::vector<CanonicalEndo> const& endos, std::int64_t n) {
      Report report;
      report.name         = "decomposition";
      auto const elements = Window(n).elements();
      for (auto const& e : endos) {
        Element const o = image_of_origin(e);
        ++report.checks;
        if (o.i != o.j || checked::add(checked::mul(2, o.i), o.f) != e.twist) {
          report.fail(law_failure("origin law for " + to_string(e), Element{0, 0, 0},
                                  std::nullopt, o));
          return report;
        }
        auto const d = decompose(e);
        if (image_of_origin(d.endo0) != Element{0, 0, 0} || !is_automorphism(d.automorphism)) {
          report.fail("decompose(" + to_string(e) + ") has the wrong shape");
          return report;
        }
        for (auto const& x : elements) {
          ++report.checks;
          Element const lhs = apply(e, x);
          Element const rhs = recompose(d, x);
          if (lhs != rhs) {
            report.fail(law_failure("recompose " + to_string(e), x, std::nullopt, lhs, rhs));
            return report;
          }
        }
      }
      return report;
    }

    Report classify_roundtrip(std::vector<CanonicalEndo> const& endos,
                              std::int64_t                      n,
                              CheckOptions const&               opts) {
      Report report;
      report.name = "classify-roundtrip";
      for (auto const& e : endos) {
        auto result = classify(tabulate(e, n), opts);
        report.checks += result.report.checks;
        if (!result.endo || *result.endo != e) {
          result.report.name = "classify " + to_string(e);
          if (result.endo) {
            result.report.fail("returned " + to_string(*result.endo));
          }
          report.absorb(std::move(result.report));
          return report;
        }
      }
      return report;
    }

    Report composition(std::vector<std::pair<CanonicalEndo, CanonicalEndo>> const& pairs,
                       std::int64_t                                             n) {
      Report report;
      report.name         = "composition";
      auto const elements = Window(n).elements();
      for (auto const& [e1, e2] : pairs) {
        CanonicalEndo const c = compose(e1, e2, n);
        for (auto const& x : elements) {
          ++report.checks;
          Element const lhs = apply(c, x);
          Element const rhs = apply(e2, apply(e1, x));
          if (lhs != rhs) {
            report.fail(law_failure("compose " + to_string(e1) + " " + to_string(e2),
                                    x, std::nullopt, lhs, rhs));
            return report;
          }
        }
        if (e1.twist == 0 && e2.twist == 0 && e1.base.kind() == BaseKind::alpha
            && e2.base.kind() == BaseKind::alpha) {
          ++report.checks;
          CanonicalEndo const expected{
              make_alpha(e1.base.k() * e2.base.k(), e2.base.p() + e2.base.k() * e1.base.p()),
              0};
          if (c != expected) {
            report.fail("alpha product law fails for " + to_string(e1) + " then "
                        + to_string(e2) + ": got " + to_string(c));
            return report;
          }
        }
      }
      return report;
    }

    Report corner_diagrams(std::int64_t kmax, std::int64_t max_corner, std::int64_t w) {
      Report report;
      report.name = "corner-diagrams";
      for (auto kind : {BaseKind::alpha, BaseKind::beta}) {
        for (auto const& b : all_bases(kind, kmax)) {
          for (std::int64_t c = 0; c <= max_corner; ++c) {
            auto sub = corner_diagram_check(b, c, w);
            sub.name = to_string(CanonicalEndo{b, 0}) + " corner " + std::to_string(c);
            if (sub.passed()) {
              report.checks += sub.checks;
            } else {
              report.absorb(std::move(sub));
            }
          }
        }
      }
      return report;
    }

    Report family_closure(std::int64_t max_tail, std::int64_t max_start) {
      Report report;
      report.name = "family-closure";
      for (std::int64_t a = 0; a <= max_tail; ++a) {
        ++report.checks;
        if (tail_shift_intersect(-1, Tail{a}, Tail{a}) != Tail{a}) {
          report.fail("(-1 + [" + std::to_string(a) + ")) cap [" + std::to_string(a)
                      + ") != [" + std::to_string(a) + ")");
          return report;
        }
      }
      std::int64_t const universe = max_start + 1;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << universe); ++mask) {
        std::vector<std::int64_t> starts;
        for (std::int64_t s = 0; s < universe; ++s) {
          if (mask & (std::uint64_t{1} << s)) {
            starts.push_back(s);
          }
        }
        bool const contiguous = starts.back() - starts.front() + 1
                                == static_cast<std::int64_t>(starts.size());
        ++report.checks;
        bool accepted = true;
        try {
          validate_family(starts);
        } catch (NotOmegaClosed const&) {
          accepted = false;
        }
        if (accepted != contiguous) {
          report.fail(std::string("validate_family ") + (accepted ? "accepted" : "rejected")
                      + " a " + (contiguous ? "contiguous" : "non-contiguous")
                      + " start set (mask " + std::to_string(mask) + ")");
          return report;
        }
      }
      return report;
    }

  }  // namespace laws

  Report theorem_suite(SuiteOptions const& opts) {
    if (opts.n < 2) {
      throw MalformedInput("suite window must be >= 2");
    }
    if (opts.kmax < 2) {
      throw MalformedInput("suite kmax must be >= 2");
    }
    if (opts.trials < 0) {
      throw MalformedInput("suite trials must be >= 0");
    }
    CheckOptions const check{opts.threads, opts.mul};
    std::int64_t const n     = opts.n;
    std::int64_t const small = std::min<std::int64_t>(n, 3);

    Rng                        rng(opts.seed);
    std::int64_t const         max_twist = 2 * n - 2;
    std::vector<CanonicalEndo> endos;
    for (std::int64_t t = 0; t < opts.trials; ++t) {
      endos.push_back(random_endo(rng, opts.kmax, max_twist));
    }
    std::vector<std::pair<CanonicalEndo, CanonicalEndo>> pairs;
    for (std::int64_t t = 0; t < opts.trials; ++t) {
      auto e1 = random_endo(rng, opts.kmax, max_twist);
      auto e2 = random_endo(rng, opts.kmax, max_twist);
      pairs.emplace_back(e1, e2);
    }

    Report report;
    report.name = "theorem-suite";
    report.absorb(laws::associativity(n, check));
    report.absorb(laws::branch_agreement(n));
    report.absorb(laws::inverse_laws(n, check));
    report.absorb(laws::idempotents(n));
    report.absorb(laws::tail_closure(Family::two(), n));
    report.absorb(laws::tail_closure(validate_family({0, 1, 2}), small));
    report.absorb(laws::tail_closure(validate_family({1, 2, 3}), small));
    report.absorb(laws::order_equivalence(small, 2 * small));
    report.absorb(laws::order_axioms(small));
    report.absorb(laws::corner_morphism(small, 3));
    report.absorb(laws::family_closure(9, 5));
    report.absorb(laws::base_soundness(BaseKind::alpha, opts.kmax, -3, 3, n, check));
    report.absorb(laws::base_soundness(BaseKind::beta, opts.kmax, -3, 3, n, check));
    report.absorb(laws::pseudo_alpha_rejected(opts.kmax, n, check));
    report.absorb(laws::pseudo_beta_rejected(opts.kmax, n, check));
    report.absorb(laws::twist_laws(n, 4));
    report.absorb(laws::decomposition(endos, n));
    report.absorb(laws::classify_roundtrip(endos, n, check));
    report.absorb(laws::composition(pairs, n));
    report.absorb(laws::corner_diagrams(opts.kmax, 3, n));
    return report;
  }

}  // namespace bzf
