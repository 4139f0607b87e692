#ifndef BZF_CORE_HPP_
#define BZF_CORE_HPP_

// Elements and multiplication of the semigroup B_Z^F: triples (i, j, F)
// with i, j integers and F a nonempty inductive subset of omega drawn from
// an omega-closed family. Every nonempty inductive subset of omega is a tail
// [a) = {x >= a}, so a tail is stored as its least element.

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t, uint32_t, uint64_t
#include <functional>   // for hash
#include <optional>     // for optional
#include <string>       // for string
#include <tuple>        // for tuple
#include <utility>      // for move
#include <vector>       // for vector

namespace bzf {

  //! The tail [start) = {x in omega : x >= start}.
  struct Tail {
    std::int64_t start = 0;

    constexpr auto operator<=>(Tail const&) const = default;
  };

  //! A validated omega-closed family of tails, stored by ascending start.
  //!
  //! Instances are only produced by validate_family (or Family::two), so
  //! every Family in circulation is closed under F1 cap (-n + F2).
  class Family {
   public:
    //! The two-element family {[0), [1)}.
    static Family const& two();

    std::size_t size() const noexcept {
      return _starts.size();
    }

    std::vector<std::int64_t> const& starts() const noexcept {
      return _starts;
    }

    Tail tail(std::size_t index) const;

    std::optional<std::size_t> index_of(Tail t) const noexcept;

    bool operator==(Family const&) const = default;

   private:
    explicit Family(std::vector<std::int64_t> starts)
        : _starts(std::move(starts)) {}

    friend Family validate_family(std::vector<std::int64_t> starts);

    std::vector<std::int64_t> _starts;
  };

  //! Validates a strictly increasing list of tail starts as an omega-closed
  //! family.
  //!
  //! Closure is checked for every pair of members and every shift
  //! n <= max(starts); beyond that -n + F2 contains all of omega and the
  //! intersection is just F1.
  //!
  //! \throws MalformedInput if \p starts is empty, unsorted, has duplicates or
  //! negative entries.
  //! \throws NotOmegaClosed carrying the first violating (F1, F2, n), scanning
  //! F1, then F2, then n in ascending order.
  Family validate_family(std::vector<std::int64_t> starts);

  //! (c + A) cap B, as a tail.
  Tail tail_shift_intersect(std::int64_t c, Tail a, Tail b);

  //! An element (i, j, F) where F is given by its index in the ambient family.
  struct Element {
    std::int64_t  i = 0;
    std::int64_t  j = 0;
    std::uint32_t f = 0;

    constexpr bool operator==(Element const&) const = default;
  };

  //! Rank of an integer in the scan order 0, -1, 1, -2, 2, ...
  constexpr std::uint64_t scan_rank(std::int64_t v) noexcept {
    return v >= 0 ? 2 * static_cast<std::uint64_t>(v)
                  : 2 * static_cast<std::uint64_t>(-(v + 1)) + 1;
  }

  //! The element ordering used for enumeration and for picking least
  //! counterexamples: lexicographic on (i, j, f), with integers compared by
  //! scan_rank so that elements close to the origin come first.
  struct ScanOrder {
    constexpr bool operator()(Element const& x, Element const& y) const noexcept {
      auto const key = [](Element const& e) {
        return std::tuple(scan_rank(e.i), scan_rank(e.j), e.f);
      };
      return key(x) < key(y);
    }
  };

  //! Lexicographic ScanOrder on pairs.
  constexpr bool scan_less(Element const& x1,
                           Element const& y1,
                           Element const& x2,
                           Element const& y2) noexcept {
    ScanOrder const lt;
    if (lt(x1, x2)) {
      return true;
    }
    if (lt(x2, x1)) {
      return false;
    }
    return lt(y1, y2);
  }

  struct ElementHash {
    std::size_t operator()(Element const& e) const noexcept {
      std::uint64_t h = static_cast<std::uint64_t>(e.i) * 0x9E3779B97F4A7C15ULL;
      h ^= static_cast<std::uint64_t>(e.j) + 0x632BE59BD9B4E019ULL + (h << 6)
           + (h >> 2);
      h ^= static_cast<std::uint64_t>(e.f) + 0x94D049BB133111EBULL + (h << 6)
           + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  //! The finite set {(i, j, f) : |i| <= n, |j| <= n, f < family_size}.
  class Window {
   public:
    explicit Window(std::int64_t n, std::size_t family_size = 2);

    std::int64_t n() const noexcept {
      return _n;
    }
    std::size_t family_size() const noexcept {
      return _family_size;
    }
    //! (2n + 1)^2 * family_size
    std::size_t size() const noexcept;

    bool contains(Element const& x) const noexcept;

    //! All elements, sorted by ScanOrder.
    std::vector<Element> elements() const;

   private:
    std::int64_t _n;
    std::size_t  _family_size;
  };

  // Multiplication in the semigroup over a given family. Both throw
  // FamilyMismatch if an operand's index is not in the family and
  // OverflowError on any overflow.
  Element mul(Family const& family, Element const& x, Element const& y);

  //! Multiplication over the two-element family {[0), [1)}.
  Element mul(Element const& x, Element const& y);

  namespace detail {
    // The two branches of the product formula, evaluated unconditionally.
    // mul uses mul_lower when x.j <= y.i and mul_upper otherwise; at x.j == y.i
    // both apply and must agree.
    Element mul_lower(Family const& family, Element const& x, Element const& y);
    Element mul_upper(Family const& family, Element const& x, Element const& y);
  }  // namespace detail

  bool is_idempotent(Element const& x);

  //! The unique inverse (j, i, f) of (i, j, f).
  constexpr Element invert(Element const& x) noexcept {
    return {x.j, x.i, x.f};
  }

  //! Natural partial order: x <= y iff x = x x^-1 y.
  bool nat_leq(Element const& x, Element const& y);

  //! Membership in the corner (-n, -n, [0)) S (-n, -n, [0)), decided by
  //! evaluating the double product.
  bool in_corner(Element const& x, std::int64_t n);

  //! Shifts the corner at -n onto the corner at 0: (i, j, f) -> (i + n, j + n, f).
  //! \throws NotInCorner if \p x is not in the corner at -n.
  Element corner_iso(Element const& x, std::int64_t n);

  //! Inverse of corner_iso: (i, j, f) -> (i - n, j - n, f).
  //! \throws NotInCorner if \p x is not in the corner at 0.
  Element corner_iso_inv(Element const& x, std::int64_t n);

  std::string to_string(Element const& x);

}  // namespace bzf

template <>
struct std::hash<bzf::Element> : bzf::ElementHash {};

#endif  // BZF_CORE_HPP_
