#include "schubkit/restriction.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace schubkit {

namespace {

void require_reduced_word_for(const WeylGroup& group, const Word& q, const WeylElement& v) {
    if (!group.is_reduced(q)) throw std::invalid_argument("Q must be a reduced word");
    if (group.from_word(q) != v) throw std::invalid_argument("Q is not a word for v");
}

}  // namespace

LaurentPolynomial RestrictionTables::restrict_kk(const WeylElement& w, const WeylElement& v,
                                                 DescentPolicy policy) const {
    const int rank = group_->rank();
    if (!group_->bruhat_leq(w, v)) return LaurentPolynomial(rank);
    if (v.is_identity()) return LaurentPolynomial::constant(rank, 1);

    auto& memo = kk_memo_[policy == DescentPolicy::SmallestIndex ? 0 : 1];
    Key key{w.mat, v.mat};
    {
        std::shared_lock lock(mutex_);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    auto ds = group_->descents(v);
    const int alpha = policy == DescentPolicy::SmallestIndex ? *ds.begin() : *ds.rbegin();
    const WeylElement vr = group_->multiply_simple(v, alpha);
    LaurentPolynomial result(rank);
    if (!group_->right_descent(w, alpha)) {
        result = restrict_kk(w, vr, policy);
    } else {
        const WeylElement wr = group_->multiply_simple(w, alpha);
        const LaurentPolynomial factor = one_minus_exp(group_->act_on_simple(v, alpha));
        if (!group_->bruhat_leq(w, vr)) {
            result = factor * restrict_kk(wr, vr, policy);
        } else {
            const LaurentPolynomial at_vr = restrict_kk(w, vr, policy);
            result = at_vr + factor * restrict_kk(wr, vr, policy) - factor * at_vr;
        }
    }
    {
        std::unique_lock lock(mutex_);
        memo.emplace(std::move(key), result);
    }
    return result;
}

CohomologyPolynomial RestrictionTables::cohomology_recursion(const WeylElement& w, const WeylElement& v,
                                                             DescentPolicy policy) const {
    const int rank = group_->rank();
    if (!group_->bruhat_leq(w, v)) return CohomologyPolynomial(rank);
    if (v.is_identity()) return CohomologyPolynomial::constant(rank, 1);

    auto& memo = coh_memo_[policy == DescentPolicy::SmallestIndex ? 0 : 1];
    Key key{w.mat, v.mat};
    {
        std::shared_lock lock(mutex_);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    auto ds = group_->descents(v);
    const int alpha = policy == DescentPolicy::SmallestIndex ? *ds.begin() : *ds.rbegin();
    const WeylElement vr = group_->multiply_simple(v, alpha);
    CohomologyPolynomial result(rank);
    if (!group_->right_descent(w, alpha)) {
        result = cohomology_recursion(w, vr, policy);
    } else {
        const WeylElement wr = group_->multiply_simple(w, alpha);
        const CohomologyPolynomial factor = linear_form(-group_->act_on_simple(v, alpha));
        if (!group_->bruhat_leq(w, vr)) {
            result = factor * cohomology_recursion(wr, vr, policy);
        } else {
            result = cohomology_recursion(w, vr, policy) + factor * cohomology_recursion(wr, vr, policy);
        }
    }
    {
        std::unique_lock lock(mutex_);
        memo.emplace(std::move(key), result);
    }
    return result;
}

LaurentPolynomial restrict_kk(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                              DescentPolicy policy) {
    return RestrictionTables(group).restrict_kk(w, v, policy);
}

CohomologyPolynomial restrict_cohomology_recursion(const WeylGroup& group, const WeylElement& w,
                                                   const WeylElement& v, DescentPolicy policy) {
    return RestrictionTables(group).cohomology_recursion(w, v, policy);
}

LaurentPolynomial restrict_subword(const WeylGroup& group, const SubwordComplex& delta) {
    const std::vector<RootVector> betas = group.beta_sequence(delta.word());
    std::vector<LaurentPolynomial> images;
    images.reserve(betas.size());
    for (const RootVector& beta : betas) images.push_back(exp_of(-beta));
    return specialize(delta.k_polynomial(), images, group.rank());
}

LaurentPolynomial restrict_subword(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                                   const Word& q) {
    require_reduced_word_for(group, q, v);
    return restrict_subword(group, SubwordComplex(group, q, w));
}

namespace {

// sum over the given faces of sign(|Q\F| - length(w)) prod_{j in Q\F}
// (1 - e^{-beta_j}), each product expanded over subsets of the complement.
LaurentPolynomial signed_complement_sum(const WeylGroup& group, const SubwordComplex& delta,
                                        const std::vector<FaceMask>& faces) {
    const int rank = group.rank();
    const int k = delta.num_positions();
    const int lw = group.length(delta.target());
    const std::vector<RootVector> betas = group.beta_sequence(delta.word());
    const FaceMask full = k == 0 ? 0 : (FaceMask{1} << k) - 1;

    LaurentPolynomial out(rank);
    for (FaceMask f : faces) {
        const FaceMask rest = full & ~f;
        const int sign = ((std::popcount(rest) - lw) % 2 == 0) ? 1 : -1;
        FaceMask s = rest;
        while (true) {
            RootVector lambda = RootVector::zero(rank);
            for (int j = 0; j < k; ++j)
                if (s & (FaceMask{1} << j)) lambda = lambda - betas[static_cast<std::size_t>(j)];
            out.add_term(lambda.coords, (std::popcount(s) % 2 == 0) ? sign : -sign);
            if (s == 0) break;
            s = (s - 1) & rest;
        }
    }
    return out;
}

}  // namespace

LaurentPolynomial restrict_graham_willems(const WeylGroup& group, const SubwordComplex& delta) {
    return signed_complement_sum(group, delta, delta.interior_faces_demazure());
}

LaurentPolynomial restrict_graham_willems(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                                          const Word& q) {
    require_reduced_word_for(group, q, v);
    return restrict_graham_willems(group, SubwordComplex(group, q, w));
}

CohomologyPolynomial billey_restriction(const WeylGroup& group, const SubwordComplex& delta) {
    const int rank = group.rank();
    const std::vector<RootVector> betas = group.beta_sequence(delta.word());
    CohomologyPolynomial out(rank);
    for (FaceMask f : delta.facets()) {
        CohomologyPolynomial term = CohomologyPolynomial::constant(rank, 1);
        for (int j = 0; j < delta.num_positions(); ++j)
            if (!(f & (FaceMask{1} << j))) term *= linear_form(betas[static_cast<std::size_t>(j)]);
        out += term;
    }
    return out;
}

CohomologyPolynomial billey_restriction(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                                        const Word& q) {
    require_reduced_word_for(group, q, v);
    return billey_restriction(group, SubwordComplex(group, q, w));
}

LaurentPolynomial boundary_ideal_class(const WeylGroup& group, const SubwordComplex& delta) {
    return signed_complement_sum(group, delta, delta.all_faces());
}

LaurentPolynomial boundary_ideal_class(const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                                       const Word& q) {
    require_reduced_word_for(group, q, v);
    return boundary_ideal_class(group, SubwordComplex(group, q, w));
}

CellWeights cell_weights(const WeylGroup& group, const WeylElement& v) {
    CellWeights out;
    for (const RootVector& beta : group.positive_roots()) {
        RootVector image = group.act(v, -beta);  // v . (negative root)
        if (image.is_negative()) out.cell.push_back(image);
        RootVector forward = group.act(v, beta);
        if (forward.is_positive()) out.conversion.push_back(-forward);
    }
    std::sort(out.cell.begin(), out.cell.end());
    std::sort(out.conversion.begin(), out.conversion.end());
    return out;
}

}  // namespace schubkit
