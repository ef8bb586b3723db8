#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "schubkit/restriction.hpp"

using namespace schubkit;

namespace {

LaurentPolynomial lp(std::vector<std::pair<std::vector<int>, int>> terms, int nvars) {
    LaurentPolynomial p(nvars);
    for (auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

LaurentPolynomial product_over_betas(const WeylGroup& g, const Word& q) {
    LaurentPolynomial out = LaurentPolynomial::constant(g.rank(), 1);
    for (const RootVector& beta : g.beta_sequence(q)) out *= one_minus_exp(-beta);
    return out;
}

}  // namespace

TEST_CASE("Kostant-Kumar golden values in A2") {
    const WeylGroup g(CartanType::parse("A2"));
    const WeylElement s1 = g.simple_reflection(1), s2 = g.simple_reflection(2);
    const WeylElement w0 = g.from_word({1, 2, 1});

    CHECK(restrict_kk(g, s2, g.from_word({1, 2})) == lp({{{0, 0}, 1}, {{-1, -1}, -1}}, 2));
    CHECK(restrict_kk(g, s1, w0) == lp({{{0, 0}, 1}, {{-1, -1}, -1}}, 2));
    // the intermediate value the w0 computation passes through
    CHECK(restrict_kk(g, s1, g.from_word({1, 2})) == lp({{{0, 0}, 1}, {{-1, 0}, -1}}, 2));
    CHECK(restrict_kk(g, g.identity(), g.identity()) == LaurentPolynomial::constant(2, 1));
    for (const WeylElement& v : g.all_elements())
        CHECK(restrict_kk(g, g.identity(), v) == LaurentPolynomial::constant(2, 1));

    // vanishing off the Bruhat interval
    CHECK(restrict_kk(g, s1, s2).is_zero());
    CHECK(restrict_kk(g, g.from_word({1, 2}), g.from_word({2, 1})).is_zero());
}

TEST_CASE("restriction at the identity by all routes") {
    const WeylGroup g(CartanType::parse("A2"));
    const WeylElement e = g.identity();
    CHECK(restrict_kk(g, e, e) == LaurentPolynomial::constant(2, 1));
    CHECK(restrict_subword(g, e, e, {}) == LaurentPolynomial::constant(2, 1));
    CHECK(restrict_graham_willems(g, e, e, {}) == LaurentPolynomial::constant(2, 1));
    CHECK(billey_restriction(g, e, e, {}) == CohomologyPolynomial::constant(2, 1));
}

TEST_CASE("restriction at the point itself is the inversion product") {
    for (const char* name : {"A2", "B2"}) {
        const WeylGroup g(CartanType::parse(name));
        RestrictionTables tables(g);
        for (const WeylElement& w : g.all_elements()) {
            const LaurentPolynomial at_w = tables.restrict_kk(w, w);
            for (const Word& q : g.all_reduced_words(w)) CHECK(at_w == product_over_betas(g, q));
        }
    }
}

TEST_CASE("subword specialization route") {
    const WeylGroup g(CartanType::parse("A2"));
    const WeylElement s2 = g.simple_reflection(2);
    CHECK(restrict_subword(g, s2, g.from_word({1, 2}), {1, 2}) == lp({{{0, 0}, 1}, {{-1, -1}, -1}}, 2));

    const WeylElement v = g.from_word({1, 2});
    CHECK(restrict_subword(g, v, v, {1, 2}) == product_over_betas(g, {1, 2}));
    CHECK(restrict_subword(g, g.simple_reflection(1), g.simple_reflection(2), {2}).is_zero());

    CHECK_THROWS_AS(restrict_subword(g, s2, v, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(restrict_subword(g, s2, v, {2, 1}), std::invalid_argument);
}

TEST_CASE("Graham-Willems interior-face route") {
    const WeylGroup g(CartanType::parse("A2"));
    const WeylElement s1 = g.simple_reflection(1), s2 = g.simple_reflection(2);
    CHECK(restrict_graham_willems(g, s2, g.from_word({1, 2}), {1, 2}) ==
          lp({{{0, 0}, 1}, {{-1, -1}, -1}}, 2));
    CHECK(restrict_graham_willems(g, s1, g.from_word({1, 2, 1}), {1, 2, 1}) ==
          lp({{{0, 0}, 1}, {{-1, -1}, -1}}, 2));
    const WeylElement v = g.from_word({1, 2});
    CHECK(restrict_graham_willems(g, v, v, {1, 2}) == product_over_betas(g, {1, 2}));
}

TEST_CASE("three routes agree exhaustively in A2 and B2") {
    for (const char* name : {"A2", "B2"}) {
        const WeylGroup g(CartanType::parse(name));
        RestrictionTables tables(g);
        const auto elements = g.all_elements();
        for (const WeylElement& v : elements)
            for (const Word& q : g.all_reduced_words(v))
                for (const WeylElement& w : elements) {
                    if (!g.bruhat_leq(w, v)) continue;
                    const LaurentPolynomial via_kk = tables.restrict_kk(w, v);
                    CHECK_FALSE(via_kk.is_zero());  // vanishes exactly off the interval
                    CHECK(via_kk == restrict_subword(g, w, v, q));
                    CHECK(via_kk == restrict_graham_willems(g, w, v, q));
                }
    }
}

TEST_CASE("evaluation at e -> 1") {
    const WeylGroup g(CartanType::parse("B2"));
    RestrictionTables tables(g);
    const auto elements = g.all_elements();
    for (const WeylElement& v : elements)
        for (const WeylElement& w : elements) {
            if (!g.bruhat_leq(w, v)) continue;
            const Int value = tables.restrict_kk(w, v).sum_of_coefficients();
            if (w.is_identity())
                CHECK(value == 1);
            else
                CHECK(value == 0);
        }
}

TEST_CASE("descent policy does not matter") {
    for (const char* name : {"A2", "B2"}) {
        const WeylGroup g(CartanType::parse(name));
        RestrictionTables tables(g);
        const auto elements = g.all_elements();
        for (const WeylElement& v : elements)
            for (const WeylElement& w : elements)
                CHECK(tables.restrict_kk(w, v, DescentPolicy::SmallestIndex) ==
                      tables.restrict_kk(w, v, DescentPolicy::LargestIndex));
    }
}

TEST_CASE("Billey facet sums") {
    const WeylGroup g(CartanType::parse("A2"));
    const WeylElement s1 = g.simple_reflection(1), s2 = g.simple_reflection(2);
    const WeylElement w0 = g.from_word({1, 2, 1});

    for (const WeylElement& v : g.all_elements())
        CHECK(billey_restriction(g, g.identity(), v, g.canonical_reduced_word(v)) ==
              CohomologyPolynomial::constant(2, 1));

    const CohomologyPolynomial a1_plus_a2 = linear_form(RootVector{{1, 1}});
    CHECK(billey_restriction(g, s2, g.from_word({1, 2}), {1, 2}) == a1_plus_a2);
    CHECK(billey_restriction(g, s1, w0, {1, 2, 1}) == a1_plus_a2);
    CHECK(billey_restriction(g, s1, s2, {2}).is_zero());

    // homogeneous of degree length(w)
    for (const WeylElement& w : g.all_elements()) {
        const CohomologyPolynomial sigma = billey_restriction(g, w, w0, {1, 2, 1});
        CHECK_FALSE(sigma.is_zero());
        for (const auto& [e, c] : sigma.terms()) {
            int degree = 0;
            for (int x : e) degree += x;
            CHECK(degree == g.length(w));
        }
    }
}

TEST_CASE("cohomology recursion matches the facet sums") {
    const WeylGroup g(CartanType::parse("A2"));
    const WeylElement s1 = g.simple_reflection(1), s2 = g.simple_reflection(2);
    const WeylElement w0 = g.from_word({1, 2, 1});
    const CohomologyPolynomial a1_plus_a2 = linear_form(RootVector{{1, 1}});

    CHECK(restrict_cohomology_recursion(g, s1, w0) == a1_plus_a2);
    CHECK(restrict_cohomology_recursion(g, s2, g.from_word({1, 2})) == a1_plus_a2);
    CHECK(restrict_cohomology_recursion(g, g.identity(), w0) == CohomologyPolynomial::constant(2, 1));

    for (const char* name : {"A2", "B2"}) {
        const WeylGroup gg(CartanType::parse(name));
        RestrictionTables tables(gg);
        const auto elements = gg.all_elements();
        for (const WeylElement& v : elements)
            for (const Word& q : gg.all_reduced_words(v))
                for (const WeylElement& w : elements) {
                    if (!gg.bruhat_leq(w, v)) continue;
                    CHECK(billey_restriction(gg, w, v, q) == tables.cohomology_recursion(w, v));
                    CHECK(tables.cohomology_recursion(w, v, DescentPolicy::SmallestIndex) ==
                          tables.cohomology_recursion(w, v, DescentPolicy::LargestIndex));
                }
    }
}

TEST_CASE("boundary ideal-sheaf class") {
    const WeylGroup g(CartanType::parse("A2"));
    const WeylElement s1 = g.simple_reflection(1);
    const WeylElement w0 = g.from_word({1, 2, 1});

    // e^{-a1-a2} (1 - e^{-a1-a2})
    CHECK(boundary_ideal_class(g, s1, w0, {1, 2, 1}) == lp({{{-1, -1}, 1}, {{-2, -2}, -1}}, 2));

    const WeylElement v = g.from_word({1, 2});
    CHECK(boundary_ideal_class(g, v, v, {1, 2}) == product_over_betas(g, {1, 2}));

    const WeylGroup a1(CartanType::parse("A1"));
    CHECK(boundary_ideal_class(a1, a1.identity(), a1.simple_reflection(1), {1}) == lp({{{-1}, 1}}, 1));

    // contract: equals k(Delta) - k(boundary) after specialization
    for (const WeylElement& w : g.all_elements())
        for (const WeylElement& vv : g.all_elements()) {
            if (!g.bruhat_leq(w, vv)) continue;
            const Word q = g.canonical_reduced_word(vv);
            SubwordComplex delta(g, q, w);
            std::vector<LaurentPolynomial> images;
            for (const RootVector& beta : g.beta_sequence(q)) images.push_back(exp_of(-beta));
            const LaurentPolynomial expected = specialize(delta.k_polynomial(), images, 2) -
                                               specialize(delta.boundary_k_polynomial(), images, 2);
            CHECK(boundary_ideal_class(g, delta) == expected);
        }
}

TEST_CASE("cell weight bookkeeping") {
    const WeylGroup g(CartanType::parse("A2"));
    const std::size_t all = g.positive_roots().size();

    const CellWeights at_identity = cell_weights(g, g.identity());
    CHECK(at_identity.cell.size() == all);
    CHECK(at_identity.conversion.size() == all);
    std::vector<RootVector> negatives;
    for (const RootVector& beta : g.positive_roots()) negatives.push_back(-beta);
    std::sort(negatives.begin(), negatives.end());
    CHECK(at_identity.cell == negatives);
    CHECK(at_identity.conversion == negatives);

    const CellWeights at_w0 = cell_weights(g, g.from_word({1, 2, 1}));
    CHECK(at_w0.cell.empty());
    CHECK(at_w0.conversion.empty());

    const CellWeights at_s1 = cell_weights(g, g.simple_reflection(1));
    CHECK(at_s1.cell.size() == 2);
    CHECK(at_s1.conversion.size() == 2);

    const WeylGroup b2(CartanType::parse("B2"));
    for (const WeylElement& v : b2.all_elements()) {
        const CellWeights cw = cell_weights(b2, v);
        CHECK(cw.cell.size() + static_cast<std::size_t>(b2.length(v)) == b2.positive_roots().size());
        CHECK(cw.conversion.size() + static_cast<std::size_t>(b2.length(b2.inverse(v))) ==
              b2.positive_roots().size());
    }
}
