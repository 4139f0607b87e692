#include "bzf/verify.hpp"

#include <algorithm>  // for sort, adjacent_find
#include <sstream>    // for ostringstream
#include <thread>     // for thread

#include "bzf/checked.hpp"
#include "bzf/errors.hpp"
#include "bzf/parallel.hpp"

namespace bzf {

  namespace detail {
    unsigned resolve_threads(unsigned requested) noexcept {
      if (requested != 0) {
        return requested;
      }
      unsigned const hw = std::thread::hardware_concurrency();
      return hw == 0 ? 1 : hw;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // MapTable
  ////////////////////////////////////////////////////////////////////////

  MapTable::MapTable(std::int64_t n,
                     std::vector<std::pair<Element, Element>> entries)
      : _n(n), _entries(std::move(entries)) {
    Window const win(n);
    std::sort(_entries.begin(), _entries.end(), [](auto const& a, auto const& b) {
      return ScanOrder()(a.first, b.first);
    });
    _index.reserve(_entries.size());
    for (auto const& [x, y] : _entries) {
      if (x.f > 1 || y.f > 1) {
        throw MalformedInput("map table entry " + to_string(x) + " -> "
                             + to_string(y) + " is not over {[0), [1)}");
      }
      if (!_index.emplace(x, y).second) {
        throw MalformedInput("map table has duplicate key " + to_string(x));
      }
    }
    for (auto const& x : win.elements()) {
      if (!_index.contains(x)) {
        throw MalformedInput("map table domain misses " + to_string(x)
                             + " of Window(" + std::to_string(n) + ")");
      }
    }
  }

  Element const* MapTable::find(Element const& x) const {
    auto it = _index.find(x);
    return it == _index.end() ? nullptr : &it->second;
  }

  Element const& MapTable::at(Element const& x) const {
    auto const* y = find(x);
    if (y == nullptr) {
      throw MalformedInput(to_string(x) + " is not in the map table's domain");
    }
    return *y;
  }

  MapTable tabulate(MapFn const& f, std::int64_t n) {
    Window const                             outer(checked::mul(3, n));
    std::vector<std::pair<Element, Element>> entries;
    entries.reserve(outer.size());
    for (auto const& x : outer.elements()) {
      entries.emplace_back(x, f(x));
    }
    return MapTable(n, std::move(entries));
  }

  ////////////////////////////////////////////////////////////////////////
  // Report
  ////////////////////////////////////////////////////////////////////////

  void Report::fail(Counterexample c) {
    verdict = Verdict::fail;
    if (!counterexample) {
      counterexample = std::move(c);
    }
  }

  void Report::fail(std::string why) {
    verdict = Verdict::fail;
    if (note.empty()) {
      note = std::move(why);
    }
  }

  void Report::absorb(Report sub) {
    checks += sub.checks;
    if (!sub.passed() && passed()) {
      verdict = Verdict::fail;
      note    = "first failure: " + sub.name;
    }
    subreports.push_back(std::move(sub));
  }

  std::string Report::summary() const {
    std::ostringstream os;
    os << (name.empty() ? "report" : name) << ": "
       << (passed() ? "pass" : "FAIL") << " (" << checks << " checks";
    if (skipped != 0) {
      os << ", " << skipped << " skipped";
    }
    os << ")";
    if (counterexample) {
      auto const& c = *counterexample;
      os << " " << to_string(c.kind);
      if (!c.stage.empty()) {
        os << "[" << c.stage << "]";
      }
      os << " x=" << to_string(c.x);
      if (c.y) {
        os << " y=" << to_string(*c.y);
      }
      if (c.z) {
        os << " z=" << to_string(*c.z);
      }
      if (c.lhs) {
        os << " lhs=" << to_string(*c.lhs);
      }
      if (c.rhs) {
        os << " rhs=" << to_string(*c.rhs);
      }
    }
    if (!note.empty()) {
      os << " " << note;
    }
    return os.str();
  }

  std::string to_string(FailureKind kind) {
    switch (kind) {
      case FailureKind::homomorphism:
        return "homomorphism";
      case FailureKind::injectivity:
        return "injectivity";
      case FailureKind::classification:
        return "classification";
      case FailureKind::diagram:
        return "diagram";
      case FailureKind::associativity:
        return "associativity";
      case FailureKind::law:
        return "law";
    }
    return "law";
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  Report check_homomorphism(MapTable const& m, CheckOptions const& opts) {
    MulFn const mul_fn = opts.mul ? opts.mul : MulFn([](Element const& x, Element const& y) {
      return mul(x, y);
    });
    auto const elements = m.window().elements();
    std::size_t const count = elements.size();

    std::vector<Element> images;
    images.reserve(count);
    for (auto const& x : elements) {
      images.push_back(m.at(x));
    }

    struct Partial {
      std::optional<Counterexample> first;
      std::uint64_t                 checks  = 0;
      std::uint64_t                 skipped = 0;
    };
    unsigned const       threads = detail::resolve_threads(opts.threads);
    std::vector<Partial> partial(threads);

    detail::for_each_chunk(
        count, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
          Partial& local = partial[w];
          for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < count; ++b) {
              Element const  xy  = mul_fn(elements[a], elements[b]);
              Element const* lhs = m.find(xy);
              if (lhs == nullptr) {
                ++local.skipped;
                continue;
              }
              ++local.checks;
              if (local.first) {
                continue;
              }
              Element const rhs = mul_fn(images[a], images[b]);
              if (*lhs != rhs) {
                local.first = Counterexample{FailureKind::homomorphism,
                                             elements[a],
                                             elements[b],
                                             std::nullopt,
                                             *lhs,
                                             rhs,
                                             ""};
              }
            }
          }
        });

    Report report;
    report.name = "homomorphism";
    for (auto& p : partial) {
      report.checks += p.checks;
      report.skipped += p.skipped;
      if (p.first && report.passed()) {
        report.fail(std::move(*p.first));
      }
    }
    double const total = static_cast<double>(count) * static_cast<double>(count);
    if (static_cast<double>(report.checks) < min_coverage * total) {
      std::ostringstream os;
      os << "only " << report.checks << " of " << static_cast<std::uint64_t>(total)
         << " pairs of Window(" << m.n()
         << ") have their product in the table's domain";
      throw InsufficientDomain(os.str());
    }
    return report;
  }

  Report check_injective(MapTable const& m, CheckOptions const&) {
    auto const elements = m.window().elements();

    Report report;
    report.name = "injectivity";

    // Image -> its first preimage in scan order. The first repeat of each
    // image gives that image's least colliding pair.
    std::unordered_map<Element, Element, ElementHash> first_preimage;
    first_preimage.reserve(elements.size());
    std::optional<std::pair<Element, Element>> best;
    for (auto const& x : elements) {
      ++report.checks;
      auto [it, inserted] = first_preimage.emplace(m.at(x), x);
      if (inserted) {
        continue;
      }
      if (!best || scan_less(it->second, x, best->first, best->second)) {
        best = std::pair(it->second, x);
      }
    }
    if (best) {
      Element const image = m.at(best->first);
      report.fail(Counterexample{FailureKind::injectivity,
                                 best->first,
                                 best->second,
                                 std::nullopt,
                                 image,
                                 image,
                                 ""});
    }
    return report;
  }

  Classification classify(MapTable const& m, CheckOptions const& opts) {
    if (m.n() < 2) {
      throw InsufficientDomain("classification needs a window of size >= 2");
    }
    Classification result;
    Report&        report = result.report;
    report.name           = "classify";

    auto const stage_failure = [&report](std::string stage,
                                         Element     x,
                                         Element     actual) {
      report.fail(Counterexample{FailureKind::classification,
                                 x,
                                 std::nullopt,
                                 std::nullopt,
                                 std::nullopt,
                                 actual,
                                 std::move(stage)});
    };

    Element const origin{0, 0, 0};
    Element const o = m.at(origin);
    ++report.checks;
    if (o.i != o.j) {
      stage_failure("origin", origin, o);
      return result;
    }
    std::int64_t const twist = checked::add(checked::mul(2, o.i), o.f);

    auto injective = check_injective(m, opts);
    report.checks += injective.checks;
    if (!injective.passed()) {
      auto c  = *injective.counterexample;
      c.stage = "injectivity";
      report.fail(std::move(c));
      return result;
    }

    std::int64_t const untwist = checked::neg(twist);
    auto const         reduced = [&](Element const& x) {
      return apply_aut(untwist, m.at(x));
    };

    Element const scale_probe{0, 1, 0};
    Element const scaled = reduced(scale_probe);
    ++report.checks;
    if (scaled.i != 0 || scaled.f != 0 || scaled.j < 1) {
      stage_failure("scale", scale_probe, scaled);
      return result;
    }
    std::int64_t const k = scaled.j;

    Element const tail_probe{0, 0, 1};
    Element const tailed = reduced(tail_probe);
    ++report.checks;
    std::int64_t const p = tailed.i;
    std::optional<EndoBase> base;
    if (tailed.i == tailed.j) {
      if (tailed.f == 1 && p >= 0 && p < k) {
        base = make_alpha(k, p);
      } else if (tailed.f == 0 && k >= 2 && p >= 1 && p < k) {
        base = make_beta(k, p);
      }
    }
    if (!base) {
      stage_failure("tail", tail_probe, tailed);
      return result;
    }

    CanonicalEndo const candidate{*base, twist};
    for (auto const& [x, y] : m.entries()) {
      ++report.checks;
      Element const expected = apply(candidate, x);
      if (expected != y) {
        report.fail(Counterexample{FailureKind::classification,
                                   x,
                                   std::nullopt,
                                   std::nullopt,
                                   expected,
                                   y,
                                   "verify"});
        return result;
      }
    }
    result.endo = candidate;
    return result;
  }

  Report corner_diagram_check(EndoBase const& b, std::int64_t n, std::int64_t w) {
    Report report;
    report.name = "corner-diagram";
    for (auto const& x : Window(w).elements()) {
      if (!in_corner(x, n)) {
        ++report.skipped;
        continue;
      }
      ++report.checks;
      Element const lhs = corner_iso_inv(apply_base(b, corner_iso(x, n)), n);

      std::int64_t const i = checked::add(x.i, n);
      std::int64_t const j = checked::add(x.j, n);
      Element            rhs;
      if (x.f == 0) {
        rhs = {checked::sub(checked::mul(b.k(), i), n),
               checked::sub(checked::mul(b.k(), j), n),
               0};
      } else {
        rhs = {checked::sub(checked::add(b.p(), checked::mul(b.k(), i)), n),
               checked::sub(checked::add(b.p(), checked::mul(b.k(), j)), n),
               b.kind() == BaseKind::alpha ? 1u : 0u};
      }
      if (lhs != rhs) {
        report.fail(Counterexample{
            FailureKind::diagram, x, std::nullopt, std::nullopt, lhs, rhs, ""});
        break;
      }
    }
    return report;
  }

}  // namespace bzf
