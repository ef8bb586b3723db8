#pragma once

// Weyl group elements as integer matrices acting on the root lattice, plus
// words, length, Bruhat order, Demazure products and the beta_j sequence of
// a reduced word.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "schubkit/cartan.hpp"

namespace schubkit {

// Sequence of simple indices, 1-based. Serialized as "1,2,1"; the empty
// string is the empty word.
using Word = std::vector<int>;

Word parse_word(std::string_view s);
std::string format_word(const Word& q);

// A group element, stored as the rank x rank integer matrix of its action on
// root-lattice coordinates; column j is the image of alpha_j. Equality of
// elements is equality of matrices.
struct WeylElement {
    int rank = 0;
    std::vector<int> mat;  // row-major

    int at(int r, int c) const { return mat[static_cast<std::size_t>(r * rank + c)]; }
    int& at(int r, int c) { return mat[static_cast<std::size_t>(r * rank + c)]; }
    bool is_identity() const;
    RootVector column(int j0) const;  // image of alpha_{j0+1}

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement& a, const WeylElement& b) {
        if (auto c = a.rank <=> b.rank; c != 0) return c;
        return a.mat <=> b.mat;
    }
};

// Context for one finite Weyl group: caches the Cartan matrix, the simple
// reflection matrices and the positive roots, and memoizes Bruhat-order
// queries. All queries are const and safe for concurrent use; the Bruhat
// memo behaves as if each pair were computed once.
class WeylGroup {
  public:
    explicit WeylGroup(CartanType type);

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const CartanMatrix& cartan() const { return cartan_; }
    const std::vector<RootVector>& positive_roots() const { return positive_roots_; }

    WeylElement identity() const;
    WeylElement simple_reflection(int i) const;  // 1-based
    RootVector simple_root(int i) const { return RootVector::simple(rank(), i); }

    WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
    WeylElement multiply_simple(const WeylElement& w, int i) const;  // w * r_i
    WeylElement inverse(const WeylElement& w) const;
    RootVector act(const WeylElement& w, const RootVector& x) const;

    // w * alpha_i as a root; its sign decides length(w r_i) vs length(w).
    RootVector act_on_simple(const WeylElement& w, int i) const { return w.column(i - 1); }
    bool right_descent(const WeylElement& w, int i) const;  // length(w r_i) < length(w)

    // Product of simple reflections in the order listed (left-to-right).
    WeylElement from_word(const Word& q) const;

    // Number of positive roots sent negative; equals the minimal word length.
    int length(const WeylElement& w) const;

    bool is_reduced(const Word& q) const;

    // Bruhat order via the lifting recursion (descent choice = smallest
    // index), memoized over (w, v).
    bool bruhat_leq(const WeylElement& w, const WeylElement& v) const;

    // Fold of delta(u, r_i) = u r_i if that goes up, else u; q need not be
    // reduced.
    WeylElement demazure_product(const Word& q) const;

    // Every element exactly once, ordered by length then by lexicographically
    // least canonical reduced word. Throws std::length_error past `cap`.
    std::vector<WeylElement> all_elements(std::size_t cap = kDefaultGroupCap) const;

    std::set<int> descents(const WeylElement& v) const;  // {i : v r_i < v}

    // Deterministic rule: repeatedly emit the smallest i with v r_i < v and
    // replace v by v r_i; the emitted list reversed is the word.
    Word canonical_reduced_word(const WeylElement& v) const;

    // All reduced words in lexicographic order, truncated at `cap` if given.
    std::vector<Word> all_reduced_words(const WeylElement& v,
                                        std::optional<std::size_t> cap = std::nullopt) const;

    // beta_j = (r_{q_1} ... r_{q_{j-1}}) alpha_j for a reduced q; the betas
    // are distinct positive roots and form the inversion set of from_word(q)
    // acting on the right. Throws on a non-reduced q.
    std::vector<RootVector> beta_sequence(const Word& q) const;

    static constexpr std::size_t kDefaultGroupCap = 50000;

  private:
    void check_letter(int i) const;

    CartanType type_;
    CartanMatrix cartan_;
    std::vector<WeylElement> simple_;
    std::vector<RootVector> positive_roots_;

    mutable std::map<std::pair<std::vector<int>, std::vector<int>>, bool> bruhat_memo_;
    mutable std::shared_mutex bruhat_mutex_;
};

}  // namespace schubkit
