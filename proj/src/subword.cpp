#include "schubkit/subword.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace schubkit {

namespace {

constexpr int kMaxPositions = 22;  // 2^k face table

Word complement_word(const Word& q, FaceMask face) {
    Word rest;
    for (std::size_t p = 0; p < q.size(); ++p)
        if (!(face & (FaceMask{1} << p))) rest.push_back(q[p]);
    return rest;
}

std::vector<std::vector<int>> sorted_position_lists(const std::vector<FaceMask>& faces) {
    std::vector<std::vector<int>> lists;
    lists.reserve(faces.size());
    for (FaceMask f : faces) lists.push_back(mask_to_positions(f));
    std::sort(lists.begin(), lists.end());
    return lists;
}

}  // namespace

std::vector<int> mask_to_positions(FaceMask m) {
    std::vector<int> out;
    for (int p = 0; m != 0; ++p, m >>= 1)
        if (m & 1u) out.push_back(p + 1);
    return out;
}

FaceMask positions_to_mask(const std::vector<int>& positions, int k) {
    FaceMask m = 0;
    for (int p : positions) {
        if (p < 1 || p > k) throw std::out_of_range("position " + std::to_string(p) + " out of range");
        m |= FaceMask{1} << (p - 1);
    }
    return m;
}

std::vector<FaceMask> FaceSet::facets() const {
    std::vector<FaceMask> out;
    for (FaceMask f : faces) {
        bool maximal = true;
        for (FaceMask g : faces)
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

SubwordComplex::SubwordComplex(const WeylGroup& group, Word q, WeylElement w)
    : group_(&group), q_(std::move(q)), w_(std::move(w)) {
    k_ = static_cast<int>(q_.size());
    if (k_ > kMaxPositions) throw std::invalid_argument("word longer than supported (2^k face enumeration)");
    if (!group.is_reduced(q_)) throw std::invalid_argument("Q must be a reduced word");
    v_ = group.from_word(q_);
    w_length_ = group.length(w_);
    if (!group.bruhat_leq(w_, v_)) return;  // void complex

    // DFS over strictly ascending position subsets of size length(w) whose
    // letters multiply (reducedly, hence exactly) to w; each such subset is
    // the complement of a facet. Partial products that leave the Bruhat
    // interval [1, w] cannot recover.
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int next_pos, const WeylElement& u, int depth) -> void {
        if (depth == w_length_) {
            if (u == w_) {
                FaceMask complement = 0;
                for (int p : chosen) complement |= FaceMask{1} << (p - 1);
                facets_.push_back(~complement & ((FaceMask{1} << k_) - 1));
            }
            return;
        }
        for (int p = next_pos; p <= k_ - (w_length_ - depth - 1); ++p) {
            int letter = q_[static_cast<std::size_t>(p - 1)];
            if (group.right_descent(u, letter)) continue;  // would not stay reduced
            WeylElement ur = group.multiply_simple(u, letter);
            if (!group.bruhat_leq(ur, w_)) continue;
            chosen.push_back(p);
            self(self, p + 1, ur, depth + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 1, group.identity(), 0);
    std::sort(facets_.begin(), facets_.end());

    // downward closure of the facets, one coordinate at a time
    face_table_.assign(std::size_t{1} << k_, 0);
    for (FaceMask f : facets_) face_table_[f] = 1;
    for (int j = 0; j < k_; ++j) {
        const FaceMask bit = FaceMask{1} << j;
        for (FaceMask t = 0; t < (FaceMask{1} << k_); ++t)
            if ((t & bit) && face_table_[t]) face_table_[t ^ bit] = 1;
    }
}

int SubwordComplex::facet_size() const { return k_ - w_length_; }

bool SubwordComplex::is_face(FaceMask f) const {
    if (f >= (FaceMask{1} << k_)) throw std::out_of_range("face mask out of range");
    return group_->bruhat_leq(w_, group_->demazure_product(complement_word(q_, f)));
}

bool SubwordComplex::is_face(const std::vector<int>& positions) const {
    return is_face(positions_to_mask(positions, k_));
}

std::vector<FaceMask> SubwordComplex::all_faces() const {
    std::vector<FaceMask> out;
    for (FaceMask t = 0; t < static_cast<FaceMask>(face_table_.size()); ++t)
        if (face_table_[t]) out.push_back(t);
    return out;
}

std::vector<FaceMask> SubwordComplex::interior_faces_demazure() const {
    std::vector<FaceMask> out;
    for (FaceMask f : all_faces())
        if (group_->demazure_product(complement_word(q_, f)) == w_) out.push_back(f);
    return out;
}

std::vector<FaceMask> SubwordComplex::interior_faces_topological() const {
    if (is_void()) return {};
    const std::vector<FaceMask> faces = all_faces();
    const int ridge_size = facet_size() - 1;
    std::vector<FaceMask> boundary_ridges;
    if (ridge_size >= 0) {
        for (FaceMask r : faces) {
            if (std::popcount(r) != ridge_size) continue;
            int in_facets = 0;
            for (FaceMask f : facets_)
                if ((r & ~f) == 0) ++in_facets;
            if (in_facets == 1) boundary_ridges.push_back(r);
        }
    }
    std::vector<FaceMask> out;
    for (FaceMask f : faces) {
        bool interior = true;
        for (FaceMask r : boundary_ridges)
            if ((f & ~r) == 0) {
                interior = false;
                break;
            }
        if (interior) out.push_back(f);
    }
    return out;
}

FaceSet SubwordComplex::deletion(int p) const {
    if (p < 1 || p > k_) throw std::out_of_range("vertex out of range");
    const FaceMask bit = FaceMask{1} << (p - 1);
    FaceSet out{k_, {}};
    for (FaceMask f : all_faces())
        if (!(f & bit)) out.faces.push_back(f);
    return out;
}

FaceSet SubwordComplex::star(int p) const {
    if (p < 1 || p > k_) throw std::out_of_range("vertex out of range");
    const FaceMask bit = FaceMask{1} << (p - 1);
    FaceSet out{k_, {}};
    for (FaceMask f : all_faces())
        if (face_table_[f | bit]) out.faces.push_back(f);
    return out;
}

FaceSet SubwordComplex::link(int p) const {
    const FaceMask bit = FaceMask{1} << (p - 1);
    FaceSet st = star(p);
    FaceSet out{k_, {}};
    for (FaceMask f : st.faces)
        if (!(f & bit)) out.faces.push_back(f);
    return out;
}

QPolynomial SubwordComplex::k_from_indicator(const std::vector<std::uint8_t>& indicator) const {
    // Coefficient of q^T in sum_F q^F prod_{j notin F}(1-q_j) is the signed
    // subset sum c_T = sum_{F subseteq T} (-1)^{|T\F|} [F face]; computed by
    // one in-place finite-difference pass per coordinate.
    std::vector<long long> c(indicator.begin(), indicator.end());
    for (int j = 0; j < k_; ++j) {
        const FaceMask bit = FaceMask{1} << j;
        for (FaceMask t = 0; t < static_cast<FaceMask>(c.size()); ++t)
            if (t & bit) c[t] -= c[t ^ bit];
    }
    QPolynomial out(k_);
    std::vector<int> e(static_cast<std::size_t>(k_));
    for (FaceMask t = 0; t < static_cast<FaceMask>(c.size()); ++t) {
        if (c[t] == 0) continue;
        for (int j = 0; j < k_; ++j) e[static_cast<std::size_t>(j)] = (t >> j) & 1;
        out.add_term(e, c[t]);
    }
    return out;
}

QPolynomial SubwordComplex::k_polynomial() const {
    if (is_void()) return QPolynomial(k_);
    return k_from_indicator(face_table_);
}

QPolynomial SubwordComplex::k_polynomial_interior() const {
    QPolynomial out(k_);
    const FaceMask full = (FaceMask{1} << k_) - 1;
    std::vector<int> e(static_cast<std::size_t>(k_));
    for (FaceMask f : interior_faces_demazure()) {
        const FaceMask rest = full & ~f;
        int sign = ((std::popcount(rest) - w_length_) % 2 == 0) ? 1 : -1;
        // prod_{j in rest} (1 - q_j) expanded over subsets
        FaceMask s = rest;
        while (true) {
            for (int j = 0; j < k_; ++j) e[static_cast<std::size_t>(j)] = (s >> j) & 1;
            out.add_term(e, (std::popcount(s) % 2 == 0) ? sign : -sign);
            if (s == 0) break;
            s = (s - 1) & rest;
        }
    }
    return out;
}

QPolynomial SubwordComplex::boundary_k_polynomial() const {
    if (is_void()) return QPolynomial(k_);
    std::vector<std::uint8_t> boundary(std::size_t{1} << k_, 0);
    for (FaceMask f : all_faces()) boundary[f] = 1;
    for (FaceMask f : interior_faces_demazure()) boundary[f] = 0;
    return k_from_indicator(boundary);
}

long long SubwordComplex::euler_characteristic() const {
    long long chi = 0;
    for (FaceMask f : all_faces()) {
        if (f == 0) continue;
        chi += (std::popcount(f) % 2 == 1) ? 1 : -1;
    }
    return chi;
}

HilbertSeries SubwordComplex::hilbert_series() const {
    std::vector<int> denom;
    for (int j = 1; j <= k_; ++j) denom.push_back(j);
    return HilbertSeries{k_polynomial(), std::move(denom)};
}

nlohmann::json faces_to_json(const std::vector<FaceMask>& faces) {
    return nlohmann::json(sorted_position_lists(faces));
}

nlohmann::json SubwordComplex::to_json() const {
    nlohmann::json j;
    j["Q"] = q_;
    j["w_word"] = group_->canonical_reduced_word(w_);
    j["facets"] = faces_to_json(facets_);
    j["interior"] = faces_to_json(interior_faces_demazure());
    return j;
}

VertexDecompositionReport verify_vertex_decomposition(const WeylGroup& group, const Word& q,
                                                      const WeylElement& w) {
    if (q.empty()) throw std::invalid_argument("vertex decomposition needs a nonempty word");
    if (!group.is_reduced(q)) throw std::invalid_argument("Q must be a reduced word");
    const WeylElement v = group.from_word(q);
    if (!group.bruhat_leq(w, v)) throw std::invalid_argument("w must be <= from_word(Q)");

    const int p = static_cast<int>(q.size());
    const int alpha = q.back();
    Word q_prime(q.begin(), q.end() - 1);
    const WeylElement w_r = group.multiply_simple(w, alpha);
    const WeylElement v_r = group.from_word(q_prime);
    const bool w_goes_up = !group.right_descent(w, alpha);

    VertexDecompositionReport report;
    SubwordComplex delta(group, q, w);
    auto mismatch = [&](const std::string& what) { report.problems.push_back(what); };
    auto same_faces = [](const std::vector<FaceMask>& a, const std::vector<FaceMask>& b) { return a == b; };

    // del and star partition the faces through the link, whichever case holds.
    {
        FaceSet del = delta.deletion(p), st = delta.star(p), lk = delta.link(p);
        std::vector<FaceMask> unioned = del.faces;
        unioned.insert(unioned.end(), st.faces.begin(), st.faces.end());
        std::sort(unioned.begin(), unioned.end());
        unioned.erase(std::unique(unioned.begin(), unioned.end()), unioned.end());
        if (!same_faces(unioned, delta.all_faces())) mismatch("del and star do not cover the complex");
        std::vector<FaceMask> met;
        std::set_intersection(del.faces.begin(), del.faces.end(), st.faces.begin(), st.faces.end(),
                              std::back_inserter(met));
        if (!same_faces(met, lk.faces)) mismatch("del and star do not meet in the link");
    }

    if (w_goes_up) {
        report.case_label = 1;
        for (FaceMask f : delta.facets())
            if (!(f & (FaceMask{1} << (p - 1)))) mismatch("expected cone point in every facet");
        SubwordComplex sub(group, q_prime, w);
        if (!same_faces(delta.link(p).faces, sub.all_faces())) mismatch("link != Delta(Q',w)");
        if (!same_faces(delta.deletion(p).faces, sub.all_faces())) mismatch("del != Delta(Q',w)");
    } else if (!group.bruhat_leq(w, v_r)) {
        report.case_label = 2;
        for (FaceMask f : delta.all_faces())
            if (f & (FaceMask{1} << (p - 1))) mismatch("face uses the last position");
        SubwordComplex sub(group, q_prime, w_r);
        if (!same_faces(delta.all_faces(), sub.all_faces())) mismatch("Delta(Q,w) != Delta(Q',w r)");
    } else {
        report.case_label = 3;
        SubwordComplex lk_expect(group, q_prime, w);
        SubwordComplex del_expect(group, q_prime, w_r);
        if (!same_faces(delta.link(p).faces, lk_expect.all_faces())) mismatch("link != Delta(Q',w)");
        if (!same_faces(delta.deletion(p).faces, del_expect.all_faces())) mismatch("del != Delta(Q',w r)");
    }
    report.ok = report.problems.empty();
    return report;
}

}  // namespace schubkit
