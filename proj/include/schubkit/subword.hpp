#pragma once

// Subword complexes Delta(Q,w) on the positions of a reduced word Q: facets,
// faces, interior faces by two characterizations, vertex decompositions,
// ball/sphere diagnostics and Stanley-Reisner K-polynomials.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubkit/polynomial.hpp"
#include "schubkit/weyl.hpp"

namespace schubkit {

// Face on positions {1..k}: bit p-1 set iff position p is in the face.
using FaceMask = std::uint32_t;

std::vector<int> mask_to_positions(FaceMask m);
FaceMask positions_to_mask(const std::vector<int>& positions, int k);

// Plain face set, the common shape of deletion/star/link results.
struct FaceSet {
    int num_positions = 0;
    std::vector<FaceMask> faces;  // ascending masks

    std::vector<FaceMask> facets() const;  // inclusion-maximal members
    friend bool operator==(const FaceSet&, const FaceSet&) = default;
};

class SubwordComplex {
  public:
    // Facets are the complements of the reduced subwords of Q multiplying to
    // w. Throws std::invalid_argument when Q is not reduced; w not below
    // from_word(Q) yields the void complex (no facets), which is a legal
    // value distinct from the irrelevant complex {emptyset} at w = v.
    SubwordComplex(const WeylGroup& group, Word q, WeylElement w);

    const WeylGroup& group() const { return *group_; }
    const Word& word() const { return q_; }
    const WeylElement& target() const { return w_; }        // w
    const WeylElement& word_product() const { return v_; }  // v = from_word(Q)
    int num_positions() const { return k_; }

    bool is_void() const { return facets_.empty(); }
    const std::vector<FaceMask>& facets() const { return facets_; }
    int facet_size() const;  // |Q| - length(w); meaningless on the void complex

    // Demazure characterization: F is a face iff the Demazure product of
    // Q minus F is >= w. Agrees with membership in the facet closure.
    bool is_face(FaceMask f) const;
    bool is_face(const std::vector<int>& positions) const;

    std::vector<FaceMask> all_faces() const;  // ascending masks

    // Faces whose complement has Demazure product exactly w.
    std::vector<FaceMask> interior_faces_demazure() const;
    // Faces contained in no boundary ridge (ridge lying in exactly one
    // facet). Provably the same set; kept as an independent computation.
    std::vector<FaceMask> interior_faces_topological() const;

    FaceSet deletion(int p) const;  // {F : p not in F}
    FaceSet star(int p) const;      // {F : F + {p} is a face}
    FaceSet link(int p) const;      // {F in star : p not in F}

    // sum_{F} prod_{j in F} q_j prod_{j notin F} (1 - q_j); 0 on the void
    // complex, 1 on the full simplex.
    QPolynomial k_polynomial() const;

    // sum over interior faces of (-1)^{|Q\F| - length(w)} prod_{j notin F}
    // (1 - q_j); equal to k_polynomial() on every instance.
    QPolynomial k_polynomial_interior() const;

    // K-polynomial of the subcomplex of non-interior faces, on the same
    // variable set.
    QPolynomial boundary_k_polynomial() const;

    // Unreduced characteristic sum_{F nonempty} (-1)^{|F|-1}; 1 on balls.
    long long euler_characteristic() const;

    HilbertSeries hilbert_series() const;

    // {"Q", "w_word", "facets", "interior"}, positions 1-based ascending,
    // face lists sorted lexicographically.
    nlohmann::json to_json() const;

  private:
    QPolynomial k_from_indicator(const std::vector<std::uint8_t>& indicator) const;

    const WeylGroup* group_;
    Word q_;
    WeylElement w_;
    WeylElement v_;
    int k_ = 0;
    int w_length_ = 0;
    std::vector<FaceMask> facets_;
    std::vector<std::uint8_t> face_table_;  // indicator over all 2^k subsets; empty when void
};

struct VertexDecompositionReport {
    int case_label = 0;  // 1: cone point, 2: last position unused, 3: proper split
    bool ok = false;
    std::vector<std::string> problems;
};

// Classifies the decomposition of Delta(Q,w) at the last position of Q and
// checks the predicted link/deletion identities against complexes built on
// Q minus its last letter. Requires Q reduced, w <= from_word(Q) != 1.
VertexDecompositionReport verify_vertex_decomposition(const WeylGroup& group, const Word& q,
                                                      const WeylElement& w);

nlohmann::json faces_to_json(const std::vector<FaceMask>& faces);

}  // namespace schubkit
