#ifndef BZF_SUITE_HPP_
#define BZF_SUITE_HPP_

// Exhaustive and seeded-random checks of the algebraic laws of B_Z^F and of
// the classification of its injective endomorphisms, bundled into
// theorem_suite. Each check returns a Report; a failing Report carries the
// first counterexample in scan order.

#include <cstdint>  // for int64_t, uint64_t
#include <random>   // for mt19937_64
#include <utility>  // for pair
#include <vector>   // for vector

#include "bzf/core.hpp"
#include "bzf/morphisms.hpp"
#include "bzf/verify.hpp"

namespace bzf {

  //! Seeded generator for the random trials: std::mt19937_64 with bounded
  //! integers drawn by rejection sampling, so sequences are identical on
  //! every platform.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    //! Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

   private:
    std::mt19937_64 _engine;
  };

  //! Uniform over kind in {alpha, beta}, then k (alpha: 1..kmax, beta:
  //! 2..kmax), then p in its range, then twist in [-max_twist, max_twist].
  //! Draws alpha when kmax < 2.
  CanonicalEndo random_endo(Rng& rng, std::int64_t kmax, std::int64_t max_twist);

  //! All valid bases with k <= kmax of the given kind.
  std::vector<EndoBase> all_bases(BaseKind kind, std::int64_t kmax);

  namespace laws {
    //! (xy)z = x(yz) for all x, y, z in Window(n).
    Report associativity(std::int64_t n, CheckOptions const& opts = {});

    //! Both product branches agree when x.j = y.i, over Window(n).
    Report branch_agreement(std::int64_t n);

    //! x x^-1 x = x, x^-1 x x^-1 = x^-1, and x^-1 is the only element of
    //! Window(n) with both properties.
    Report inverse_laws(std::int64_t n, CheckOptions const& opts = {});

    //! is_idempotent(x) iff x.i = x.j on Window(n).
    Report idempotents(std::int64_t n);

    //! Every product of Window(n) elements over \p family has a member tail.
    Report tail_closure(Family const& family, std::int64_t n);

    //! nat_leq(x, y) iff x = y e for some idempotent e of Window(search_n),
    //! for x, y in Window(n).
    Report order_equivalence(std::int64_t n, std::int64_t search_n);

    //! nat_leq is reflexive, antisymmetric and transitive on Window(n).
    Report order_axioms(std::int64_t n);

    //! corner_iso respects products inside each corner at -c, c <= max_corner.
    Report corner_morphism(std::int64_t n, std::int64_t max_corner);

    //! check_homomorphism and check_injective on tabulate(base @ t, n) for
    //! every valid base of \p kind with k <= kmax and t in [tmin, tmax].
    Report base_soundness(BaseKind            kind,
                          std::int64_t        kmax,
                          std::int64_t        tmin,
                          std::int64_t        tmax,
                          std::int64_t        n,
                          CheckOptions const& opts = {});

    //! The alpha formula with p = k, k in [1, kmax], must fail
    //! check_homomorphism on Window(n).
    Report pseudo_alpha_rejected(std::int64_t kmax, std::int64_t n, CheckOptions const& opts = {});

    //! The beta formula with p = 0, k in [2, kmax], must fail check_injective.
    Report pseudo_beta_rejected(std::int64_t kmax, std::int64_t n, CheckOptions const& opts = {});

    //! a^2 = h_1 on Window(n) and a^t1 a^t2 = a^(t1 + t2) for |t1|, |t2| <=
    //! tbound, plus automorphism inversion.
    Report twist_laws(std::int64_t n, std::int64_t tbound);

    //! Origin law and decompose/recompose round trip on Window(n).
    Report decomposition(std::vector<CanonicalEndo> const& endos, std::int64_t n);

    //! classify(tabulate(e, n)) == e.
    Report classify_roundtrip(std::vector<CanonicalEndo> const& endos,
                              std::int64_t                      n,
                              CheckOptions const&               opts = {});

    //! apply(compose(e1, e2), x) = apply(e2, apply(e1, x)) on Window(n), and
    //! alpha(k1, p1) then alpha(k2, p2) = alpha(k1 k2, p2 + k2 p1).
    Report composition(std::vector<std::pair<CanonicalEndo, CanonicalEndo>> const& pairs,
                       std::int64_t                                             n);

    //! corner_diagram_check for all bases with k <= kmax and corners
    //! 0..max_corner on Window(w).
    Report corner_diagrams(std::int64_t kmax, std::int64_t max_corner, std::int64_t w);

    //! (-1 + [a)) cap [a) = [a) for a <= max_tail, and validate_family accepts
    //! exactly the contiguous subsets of {0, ..., max_start}.
    Report family_closure(std::int64_t max_tail, std::int64_t max_start);
  }  // namespace laws

  struct SuiteOptions {
    std::int64_t  n      = 4;
    std::int64_t  kmax   = 4;
    std::int64_t  trials = 100;
    std::uint64_t seed   = 7;
    unsigned      threads = 0;
    //! Replaces bzf::mul in the associativity, inverse and homomorphism
    //! checks.
    MulFn mul;
  };

  //! Runs every law above at the scale given by \p opts.
  //! \throws MalformedInput if n < 2, kmax < 2 or trials < 0.
  Report theorem_suite(SuiteOptions const& opts);

}  // namespace bzf

#endif  // BZF_SUITE_HPP_
