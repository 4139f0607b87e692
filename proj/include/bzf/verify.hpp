#ifndef BZF_VERIFY_HPP_
#define BZF_VERIFY_HPP_

// Brute-force verification of candidate maps on finite windows.
//
// A MapTable is a finite black-box map. All checks scan elements in
// ScanOrder and report the least counterexample in that order; work is split
// into contiguous ranges of the scan, so the result does not depend on the
// number of threads.

#include <cstdint>        // for int64_t, uint64_t
#include <functional>     // for function
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "bzf/core.hpp"
#include "bzf/morphisms.hpp"

namespace bzf {

  using MulFn = std::function<Element(Element const&, Element const&)>;
  using MapFn = std::function<Element(Element const&)>;

  struct CheckOptions {
    //! Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    //! Multiplication to check against; empty means bzf::mul. Tests inject
    //! deliberately broken multiplications here.
    MulFn mul;
  };

  //! Fraction of window pairs whose product must be in a table's domain for
  //! check_homomorphism to run.
  inline constexpr double min_coverage = 0.9;

  //! A finite map over {[0), [1)} whose domain contains Window(n).
  class MapTable {
   public:
    //! \throws MalformedInput on duplicate keys, tail indices other than 0
    //! or 1, or a domain missing part of Window(n).
    MapTable(std::int64_t n, std::vector<std::pair<Element, Element>> entries);

    std::int64_t n() const noexcept {
      return _n;
    }

    Window window() const {
      return Window(_n);
    }

    //! Entries sorted by ScanOrder of their keys.
    std::vector<std::pair<Element, Element>> const& entries() const noexcept {
      return _entries;
    }

    std::size_t size() const noexcept {
      return _entries.size();
    }

    //! Image of \p x, or nullptr if \p x is not in the domain.
    Element const* find(Element const& x) const;

    //! \throws MalformedInput if \p x is not in the domain.
    Element const& at(Element const& x) const;

   private:
    std::int64_t                                     _n;
    std::vector<std::pair<Element, Element>>         _entries;
    std::unordered_map<Element, Element, ElementHash> _index;
  };

  //! Tabulates \p f on Window(3n), which contains every product of two
  //! elements of Window(n); the resulting table has window size \p n.
  MapTable tabulate(MapFn const& f, std::int64_t n);

  inline MapTable tabulate(CanonicalEndo const& e, std::int64_t n) {
    return tabulate([&e](Element const& x) { return apply(e, x); }, n);
  }

  enum class Verdict { pass, fail };

  enum class FailureKind {
    homomorphism,
    injectivity,
    classification,
    diagram,
    associativity,
    law
  };

  struct Counterexample {
    FailureKind            kind = FailureKind::law;
    Element                x;
    std::optional<Element> y;
    std::optional<Element> z;
    std::optional<Element> lhs;
    std::optional<Element> rhs;
    //! Classification stage, or the name of the violated law.
    std::string stage;
  };

  struct Report {
    std::string                   name;
    Verdict                       verdict = Verdict::pass;
    std::optional<Counterexample> counterexample;
    std::uint64_t                 checks  = 0;
    std::uint64_t                 skipped = 0;
    //! Free text for failures that have no element witness.
    std::string         note;
    std::vector<Report> subreports;

    bool passed() const noexcept {
      return verdict == Verdict::pass;
    }

    void fail(Counterexample c);
    void fail(std::string why);

    //! Appends \p sub, failing this report if \p sub failed.
    void absorb(Report sub);

    //! One-line human readable description.
    std::string summary() const;
  };

  std::string to_string(FailureKind kind);

  //! Checks m(x y) = m(x) m(y) for all x, y in Window(n) whose product lies in
  //! the table's domain. Pairs with out-of-domain products are counted in
  //! Report::skipped.
  //!
  //! \throws InsufficientDomain if fewer than min_coverage of the pairs are
  //! checkable.
  Report check_homomorphism(MapTable const& m, CheckOptions const& opts = {});

  //! Checks that m restricted to Window(n) is injective. A failure carries
  //! the least colliding pair (x, y), x before y.
  Report check_injective(MapTable const& m, CheckOptions const& opts = {});

  struct Classification {
    std::optional<CanonicalEndo> endo;
    Report                       report;
  };

  //! Recovers the canonical form of \p m.
  //!
  //! Stages, in order:
  //!  - "origin": m(0,0,[0)) = (s,s,[q)) and t = 2s + q;
  //!  - "injectivity": m is injective on Window(n);
  //!  - "scale": m0 = m then a^-t maps (0,1,[0)) to (0,k,[0)) with k >= 1;
  //!  - "tail": m0(0,0,[1)) is (p,p,[1)) with p < k (alpha) or (p,p,[0)) with
  //!    1 <= p < k (beta);
  //!  - "verify": the candidate agrees with m on the whole domain.
  //!
  //! \throws InsufficientDomain if n < 2.
  Classification classify(MapTable const& m, CheckOptions const& opts = {});

  //! For every x in Window(w) lying in the corner at -n, compares
  //! corner_iso_inv(apply_base(b, corner_iso(x, n)), n) with the shifted
  //! closed form (ki - n, kj - n, [0)) and (p + ki - n, p + kj - n, [1) or [0)),
  //! where x = (i - n, j - n, f).
  Report corner_diagram_check(EndoBase const& b, std::int64_t n, std::int64_t w);

  namespace detail {
    unsigned resolve_threads(unsigned requested) noexcept;
  }

}  // namespace bzf

#endif  // BZF_VERIFY_HPP_
