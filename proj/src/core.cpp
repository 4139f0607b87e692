#include "bzf/core.hpp"

#include <algorithm>  // for max, sort, binary_search
#include <stdexcept>  // for logic_error

#include "bzf/checked.hpp"
#include "bzf/errors.hpp"

namespace bzf {

  NotOmegaClosed::NotOmegaClosed(std::int64_t first,
                                 std::int64_t second,
                                 std::int64_t shift)
      : Error("family is not omega-closed: [" + std::to_string(first)
              + ") cap (-" + std::to_string(shift) + " + ["
              + std::to_string(second) + ")) is not a member"),
        _first(first),
        _second(second),
        _shift(shift) {}

  ////////////////////////////////////////////////////////////////////////
  // Family
  ////////////////////////////////////////////////////////////////////////

  Family const& Family::two() {
    static Family const f2 = validate_family({0, 1});
    return f2;
  }

  Tail Family::tail(std::size_t index) const {
    if (index >= _starts.size()) {
      throw FamilyMismatch("tail index " + std::to_string(index)
                           + " out of range for a family of size "
                           + std::to_string(_starts.size()));
    }
    return Tail{_starts[index]};
  }

  std::optional<std::size_t> Family::index_of(Tail t) const noexcept {
    auto it = std::lower_bound(_starts.cbegin(), _starts.cend(), t.start);
    if (it == _starts.cend() || *it != t.start) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _starts.cbegin());
  }

  Family validate_family(std::vector<std::int64_t> starts) {
    if (starts.empty()) {
      throw MalformedInput("a family must contain at least one tail");
    }
    for (std::size_t k = 0; k < starts.size(); ++k) {
      if (starts[k] < 0) {
        throw MalformedInput("tail starts must be non-negative, found "
                             + std::to_string(starts[k]));
      }
      if (k > 0 && starts[k - 1] >= starts[k]) {
        throw MalformedInput("tail starts must be strictly increasing");
      }
    }
    std::int64_t const top = starts.back();
    for (auto a : starts) {
      for (auto b : starts) {
        for (std::int64_t n = 0; n <= top; ++n) {
          std::int64_t const s = std::max(a, b - n);
          if (!std::binary_search(starts.cbegin(), starts.cend(), s)) {
            throw NotOmegaClosed(a, b, n);
          }
        }
      }
    }
    return Family(std::move(starts));
  }

  Tail tail_shift_intersect(std::int64_t c, Tail a, Tail b) {
    return Tail{std::max(checked::add(a.start, c), b.start)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Window
  ////////////////////////////////////////////////////////////////////////

  Window::Window(std::int64_t n, std::size_t family_size)
      : _n(n), _family_size(family_size) {
    if (n < 1) {
      throw MalformedInput("window size must be positive, found "
                           + std::to_string(n));
    }
    if (n > (std::int64_t{1} << 20)) {
      throw MalformedInput("window size " + std::to_string(n) + " is too large");
    }
    if (family_size == 0) {
      throw MalformedInput("window over an empty family");
    }
  }

  std::size_t Window::size() const noexcept {
    auto const side = static_cast<std::size_t>(2 * _n + 1);
    return side * side * _family_size;
  }

  bool Window::contains(Element const& x) const noexcept {
    return x.i >= -_n && x.i <= _n && x.j >= -_n && x.j <= _n
           && x.f < _family_size;
  }

  std::vector<Element> Window::elements() const {
    std::vector<Element> result;
    result.reserve(size());
    for (std::int64_t i = -_n; i <= _n; ++i) {
      for (std::int64_t j = -_n; j <= _n; ++j) {
        for (std::size_t f = 0; f < _family_size; ++f) {
          result.push_back({i, j, static_cast<std::uint32_t>(f)});
        }
      }
    }
    std::sort(result.begin(), result.end(), ScanOrder());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Multiplication
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::uint32_t member_index(Family const& family, Tail t) {
      auto idx = family.index_of(t);
      if (!idx) {
        // Unreachable for a validated family.
        throw std::logic_error("product tail [" + std::to_string(t.start)
                               + ") is not a member of the family");
      }
      return static_cast<std::uint32_t>(*idx);
    }
  }  // namespace

  namespace detail {
    Element mul_lower(Family const& family, Element const& x, Element const& y) {
      Tail const t = tail_shift_intersect(
          checked::sub(x.j, y.i), family.tail(x.f), family.tail(y.f));
      return {checked::add(checked::sub(x.i, x.j), y.i),
              y.j,
              member_index(family, t)};
    }

    Element mul_upper(Family const& family, Element const& x, Element const& y) {
      Tail const t = tail_shift_intersect(
          checked::sub(y.i, x.j), family.tail(y.f), family.tail(x.f));
      return {x.i,
              checked::add(checked::sub(x.j, y.i), y.j),
              member_index(family, t)};
    }
  }  // namespace detail

  Element mul(Family const& family, Element const& x, Element const& y) {
    return x.j <= y.i ? detail::mul_lower(family, x, y)
                      : detail::mul_upper(family, x, y);
  }

  Element mul(Element const& x, Element const& y) {
    return mul(Family::two(), x, y);
  }

  bool is_idempotent(Element const& x) {
    return mul(x, x) == x;
  }

  bool nat_leq(Element const& x, Element const& y) {
    return mul(mul(x, invert(x)), y) == x;
  }

  bool in_corner(Element const& x, std::int64_t n) {
    if (n < 0) {
      throw MalformedInput("corner index must be non-negative");
    }
    Element const e{checked::neg(n), checked::neg(n), 0};
    return mul(mul(e, x), e) == x;
  }

  Element corner_iso(Element const& x, std::int64_t n) {
    if (!in_corner(x, n)) {
      throw NotInCorner(to_string(x) + " is not in the corner at -"
                        + std::to_string(n));
    }
    return {checked::add(x.i, n), checked::add(x.j, n), x.f};
  }

  Element corner_iso_inv(Element const& x, std::int64_t n) {
    if (!in_corner(x, 0)) {
      throw NotInCorner(to_string(x) + " is not in the corner at 0");
    }
    if (n < 0) {
      throw MalformedInput("corner index must be non-negative");
    }
    return {checked::sub(x.i, n), checked::sub(x.j, n), x.f};
  }

  std::string to_string(Element const& x) {
    return std::to_string(x.i) + "," + std::to_string(x.j) + ","
           + std::to_string(x.f);
  }

}  // namespace bzf
