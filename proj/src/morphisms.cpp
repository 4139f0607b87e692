#include "bzf/morphisms.hpp"

#include "bzf/checked.hpp"
#include "bzf/errors.hpp"
#include "bzf/verify.hpp"

namespace bzf {

  namespace {
    void require_f2(Element const& x) {
      if (x.f > 1) {
        throw FamilyMismatch("tail index " + std::to_string(x.f)
                             + " is not in the family {[0), [1)}");
      }
    }

    std::string params(char const* kind, std::int64_t k, std::int64_t p) {
      return std::string(kind) + "(" + std::to_string(k) + ", "
             + std::to_string(p) + ")";
    }
  }  // namespace

  EndoBase make_alpha(std::int64_t k, std::int64_t p) {
    if (k < 1 || p < 0 || p > k - 1) {
      throw ParamOutOfRange(params("alpha", k, p)
                            + " needs k >= 1 and 0 <= p <= k - 1");
    }
    return EndoBase(BaseKind::alpha, k, p);
  }

  EndoBase make_beta(std::int64_t k, std::int64_t p) {
    if (k < 2 || p < 1 || p > k - 1) {
      throw ParamOutOfRange(params("beta", k, p)
                            + " needs k >= 2 and 1 <= p <= k - 1");
    }
    return EndoBase(BaseKind::beta, k, p);
  }

  Element apply_formula(BaseKind         kind,
                        std::int64_t     k,
                        std::int64_t     p,
                        Element const&   x) {
    require_f2(x);
    if (x.f == 0) {
      return {checked::mul(k, x.i), checked::mul(k, x.j), 0};
    }
    std::uint32_t const f = kind == BaseKind::alpha ? 1 : 0;
    return {checked::add(p, checked::mul(k, x.i)),
            checked::add(p, checked::mul(k, x.j)),
            f};
  }

  Element apply_base(EndoBase const& b, Element const& x) {
    return apply_formula(b.kind(), b.k(), b.p(), x);
  }

  Element apply_aut(std::int64_t t, Element const& x) {
    require_f2(x);
    std::int64_t const s = checked::floor_half(t);
    if (t - 2 * s == 0) {
      return {checked::add(x.i, s), checked::add(x.j, s), x.f};
    }
    std::int64_t const shift = checked::add(s, x.f);
    return {checked::add(x.i, shift), checked::add(x.j, shift), 1 - x.f};
  }

  Element apply(CanonicalEndo const& e, Element const& x) {
    return apply_aut(e.twist, apply_base(e.base, x));
  }

  Element image_of_origin(CanonicalEndo const& e) {
    return apply(e, Element{0, 0, 0});
  }

  CanonicalEndo compose(CanonicalEndo const& e1,
                        CanonicalEndo const& e2,
                        std::int64_t         n) {
    auto const table = tabulate(
        [&e1, &e2](Element const& x) { return apply(e2, apply(e1, x)); }, n);
    auto const result = classify(table);
    if (!result.endo) {
      throw NormalizationFailed("composite of " + to_string(e1) + " and "
                                + to_string(e2)
                                + " did not normalize: " + result.report.summary());
    }
    return *result.endo;
  }

  bool is_automorphism(CanonicalEndo const& e) noexcept {
    return e.base == EndoBase();
  }

  CanonicalEndo invert_automorphism(CanonicalEndo const& e) {
    if (!is_automorphism(e)) {
      throw NotAnAutomorphism(to_string(e) + " is not surjective");
    }
    return {EndoBase(), checked::neg(e.twist)};
  }

  Decomposition decompose(CanonicalEndo const& e) {
    return {{e.base, 0}, {EndoBase(), e.twist}};
  }

  Element recompose(Decomposition const& d, Element const& x) {
    return apply(d.automorphism, apply(d.endo0, x));
  }

  std::string to_string(BaseKind kind) {
    return kind == BaseKind::alpha ? "alpha" : "beta";
  }

  std::string to_string(CanonicalEndo const& e) {
    return to_string(e.base.kind()) + ":" + std::to_string(e.base.k()) + ","
           + std::to_string(e.base.p()) + "@" + std::to_string(e.twist);
  }

}  // namespace bzf
