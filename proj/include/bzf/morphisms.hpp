#ifndef BZF_MORPHISMS_HPP_
#define BZF_MORPHISMS_HPP_

// Injective endomorphisms of B_Z^F over the family {[0), [1)}.
//
// Maps act on the right, so "e1 then e2" is written e1 e2. Every injective
// endomorphism is a base fixing (0, 0, [0)), either
//
//   alpha(k, p):  (i, j, [0)) -> (ki, kj, [0)),  (i, j, [1)) -> (p + ki, p + kj, [1))
//   beta(k, p):   (i, j, [0)) -> (ki, kj, [0)),  (i, j, [1)) -> (p + ki, p + kj, [0))
//
// followed by a power a^t of the tail-swapping automorphism
//
//   a: (i, j, [q)) -> (i + q, j + q, [1 - q)),
//
// whose square is the coordinate shift h_1: (i, j, [q)) -> (i + 1, j + 1, [q)).

#include <cstdint>  // for int64_t
#include <string>   // for string

#include "bzf/core.hpp"

namespace bzf {

  enum class BaseKind { alpha, beta };

  //! A validated alpha(k, p) (k >= 1, 0 <= p < k) or beta(k, p)
  //! (k >= 2, 1 <= p < k).
  class EndoBase {
   public:
    //! alpha(1, 0), the identity.
    EndoBase() = default;

    BaseKind kind() const noexcept {
      return _kind;
    }
    std::int64_t k() const noexcept {
      return _k;
    }
    std::int64_t p() const noexcept {
      return _p;
    }

    bool operator==(EndoBase const&) const = default;

   private:
    EndoBase(BaseKind kind, std::int64_t k, std::int64_t p)
        : _kind(kind), _k(k), _p(p) {}

    friend EndoBase make_alpha(std::int64_t, std::int64_t);
    friend EndoBase make_beta(std::int64_t, std::int64_t);

    BaseKind     _kind = BaseKind::alpha;
    std::int64_t _k    = 1;
    std::int64_t _p    = 0;
  };

  //! \throws ParamOutOfRange unless k >= 1 and 0 <= p <= k - 1.
  EndoBase make_alpha(std::int64_t k, std::int64_t p);

  //! \throws ParamOutOfRange unless k >= 2 and 1 <= p <= k - 1.
  EndoBase make_beta(std::int64_t k, std::int64_t p);

  //! The endomorphism \c base followed by a^twist.
  struct CanonicalEndo {
    EndoBase     base;
    std::int64_t twist = 0;

    bool operator==(CanonicalEndo const&) const = default;
  };

  //! The displayed alpha/beta formulas for arbitrary integer k and p, with no
  //! range check. Outside the validated ranges these are "pseudo-bases" that
  //! generally fail to be injective endomorphisms; the verifier uses them as
  //! negative controls.
  Element apply_formula(BaseKind kind, std::int64_t k, std::int64_t p, Element const& x);

  Element apply_base(EndoBase const& b, Element const& x);

  //! a^t applied to x, for any integer t. With t = 2s + r (r in {0, 1}):
  //! r = 0 gives (i + s, j + s, [q)) and r = 1 gives (i + s + q, j + s + q, [1 - q)).
  Element apply_aut(std::int64_t t, Element const& x);

  //! apply_aut(e.twist, apply_base(e.base, x))
  Element apply(CanonicalEndo const& e, Element const& x);

  //! Image of (0, 0, [0)); always (s, s, [q)) with 2s + q = e.twist.
  Element image_of_origin(CanonicalEndo const& e);

  //! The canonical form of "e1 then e2", found by classifying the pointwise
  //! composite on a window of size \p n (>= 2) and verifying it there.
  //! \throws NormalizationFailed if classification fails.
  CanonicalEndo compose(CanonicalEndo const& e1, CanonicalEndo const& e2, std::int64_t n = 4);

  bool is_automorphism(CanonicalEndo const& e) noexcept;

  //! \throws NotAnAutomorphism unless the base is alpha(1, 0).
  CanonicalEndo invert_automorphism(CanonicalEndo const& e);

  //! e = endo0 then automorphism, where endo0 fixes (0, 0, [0)).
  struct Decomposition {
    CanonicalEndo endo0;
    CanonicalEndo automorphism;
  };

  Decomposition decompose(CanonicalEndo const& e);

  //! apply(d.automorphism, apply(d.endo0, x))
  Element recompose(Decomposition const& d, Element const& x);

  std::string to_string(BaseKind kind);
  std::string to_string(CanonicalEndo const& e);

}  // namespace bzf

#endif  // BZF_MORPHISMS_HPP_
