#pragma once

// Restrictions S_w|_v of equivariant Schubert K-classes to fixed points, by
// three independent routes (the Kostant-Kumar recursion, specialization of
// the subword-complex K-polynomial, and the Graham/Willems interior-face
// sum), the Billey/AJS cohomology limit, and the boundary ideal-sheaf class.

#include <map>
#include <shared_mutex>
#include <vector>

#include "schubkit/polynomial.hpp"
#include "schubkit/subword.hpp"
#include "schubkit/weyl.hpp"

namespace schubkit {

// Which descent of v the recursions peel; the result never depends on it.
enum class DescentPolicy { SmallestIndex, LargestIndex };

// Memoized recursion state for one group. Lookups are safe for concurrent
// use; a racing recompute inserts the identical value.
class RestrictionTables {
  public:
    explicit RestrictionTables(const WeylGroup& group) : group_(&group) {}

    // S_w|_v: zero unless w <= v; 1 at v = 1; otherwise peeled off a descent
    // alpha of v with the K-theoretic multiplier (1 - e^{v.alpha}).
    LaurentPolynomial restrict_kk(const WeylElement& w, const WeylElement& v,
                                  DescentPolicy policy = DescentPolicy::SmallestIndex) const;

    // sigma_w|_v: same recursion shape with multiplier (-v.alpha); the
    // classical limit, degree length(w) when nonzero.
    CohomologyPolynomial cohomology_recursion(const WeylElement& w, const WeylElement& v,
                                              DescentPolicy policy = DescentPolicy::SmallestIndex) const;

    const WeylGroup& group() const { return *group_; }

  private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    const WeylGroup* group_;
    mutable std::map<Key, LaurentPolynomial> kk_memo_[2];
    mutable std::map<Key, CohomologyPolynomial> coh_memo_[2];
    mutable std::shared_mutex mutex_;
};

// One-shot conveniences (fresh memo per call).
LaurentPolynomial restrict_kk(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                              DescentPolicy policy = DescentPolicy::SmallestIndex);
CohomologyPolynomial restrict_cohomology_recursion(const WeylGroup& group, const WeylElement& w,
                                                   const WeylElement& v,
                                                   DescentPolicy policy = DescentPolicy::SmallestIndex);

// specialize(k_polynomial(Delta(Q,w)), q_j -> e^{-beta_j}); Q must be a
// reduced word for v.
LaurentPolynomial restrict_subword(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                                   const Word& q);
LaurentPolynomial restrict_subword(const WeylGroup& group, const SubwordComplex& delta);

// Interior-face sum: sum over interior F of (-1)^{|Q\F|-length(w)}
// prod_{j in Q\F} (1 - e^{-beta_j}).
LaurentPolynomial restrict_graham_willems(const WeylGroup& group, const WeylElement& w,
                                          const WeylElement& v, const Word& q);
LaurentPolynomial restrict_graham_willems(const WeylGroup& group, const SubwordComplex& delta);

// Facet sum of products of the complementary beta_j as linear forms;
// homogeneous of degree length(w), zero iff w is not below v.
CohomologyPolynomial billey_restriction(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                                        const Word& q);
CohomologyPolynomial billey_restriction(const WeylGroup& group, const SubwordComplex& delta);

// All-faces sum with the interior-face signs; equals the specialization of
// k(Delta) - k(boundary of Delta).
LaurentPolynomial boundary_ideal_class(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                                       const Word& q);
LaurentPolynomial boundary_ideal_class(const WeylGroup& group, const SubwordComplex& delta);

// Weight bookkeeping for the patch/cell factorization: the cell weights
// {v.beta : beta < 0, v.beta < 0} and the series-to-class conversion weights
// {-v.beta : beta > 0, v.beta > 0}, each sorted; both have size
// |positive_roots| - length(v).
struct CellWeights {
    std::vector<RootVector> cell;
    std::vector<RootVector> conversion;
};
CellWeights cell_weights(const WeylGroup& group, const WeylElement& v);

}  // namespace schubkit
