#include "schubkit/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace schubkit {

Word parse_word(std::string_view s) {
    Word q;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        int n = 0;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
            n = n * 10 + (s[j] - '0');
            ++j;
        }
        if (j == i) throw std::invalid_argument("cannot parse word '" + std::string(s) + "'");
        q.push_back(n);
        i = j;
        if (i < s.size()) {
            if (s[i] != ',') throw std::invalid_argument("cannot parse word '" + std::string(s) + "'");
            ++i;
            if (i == s.size()) throw std::invalid_argument("trailing comma in word '" + std::string(s) + "'");
        }
    }
    return q;
}

std::string format_word(const Word& q) {
    std::string out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(q[i]);
    }
    return out;
}

bool WeylElement::is_identity() const {
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

RootVector WeylElement::column(int j0) const {
    RootVector v = RootVector::zero(rank);
    for (int r = 0; r < rank; ++r) v.coords[static_cast<std::size_t>(r)] = at(r, j0);
    return v;
}

WeylGroup::WeylGroup(CartanType type)
    : type_(type), cartan_(cartan_matrix(type)), positive_roots_(schubkit::positive_roots(type)) {
    const int n = rank();
    simple_.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        WeylElement s = identity();
        // column j of r_i is alpha_j - A[i][j] alpha_i
        for (int j = 0; j < n; ++j) s.at(i - 1, j) -= cartan_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        simple_.push_back(std::move(s));
    }
}

WeylElement WeylGroup::identity() const {
    const int n = rank();
    WeylElement e;
    e.rank = n;
    e.mat.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) e.at(i, i) = 1;
    return e;
}

WeylElement WeylGroup::simple_reflection(int i) const {
    check_letter(i);
    return simple_[static_cast<std::size_t>(i - 1)];
}

void WeylGroup::check_letter(int i) const {
    if (i < 1 || i > rank()) throw std::out_of_range("simple index " + std::to_string(i) + " out of range");
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
    const int n = rank();
    WeylElement c;
    c.rank = n;
    c.mat.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

WeylElement WeylGroup::multiply_simple(const WeylElement& w, int i) const {
    check_letter(i);
    // (w r_i) column j = column_j(w) - A[i][j] column_i(w)
    const int n = rank();
    const auto& row = cartan_[static_cast<std::size_t>(i - 1)];
    WeylElement c = w;
    for (int j = 0; j < n; ++j) {
        int aij = row[static_cast<std::size_t>(j)];
        if (aij == 0) continue;
        for (int r = 0; r < n; ++r) c.at(r, j) -= aij * w.at(r, i - 1);
    }
    return c;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
    // Strip right descents: w = r_{i_k} ... r_{i_1} for the emitted list
    // (i_1, ..., i_k), so the product in emitted order is w^{-1}.
    WeylElement u = w;
    WeylElement inv = identity();
    while (!u.is_identity()) {
        int i = 0;
        for (int j = 1; j <= rank(); ++j)
            if (right_descent(u, j)) {
                i = j;
                break;
            }
        if (i == 0) throw std::logic_error("non-identity element with no descent");
        u = multiply_simple(u, i);
        inv = multiply_simple(inv, i);
    }
    return inv;
}

RootVector WeylGroup::act(const WeylElement& w, const RootVector& x) const {
    const int n = rank();
    if (x.rank() != n) throw std::invalid_argument("rank mismatch");
    RootVector y = RootVector::zero(n);
    for (int r = 0; r < n; ++r) {
        long long acc = 0;
        for (int c = 0; c < n; ++c) acc += static_cast<long long>(w.at(r, c)) * x.coords[static_cast<std::size_t>(c)];
        y.coords[static_cast<std::size_t>(r)] = static_cast<int>(acc);
    }
    return y;
}

bool WeylGroup::right_descent(const WeylElement& w, int i) const {
    check_letter(i);
    // w alpha_i is a root, so one strictly signed entry decides.
    for (int r = 0; r < rank(); ++r) {
        int e = w.at(r, i - 1);
        if (e != 0) return e < 0;
    }
    throw std::logic_error("zero column in Weyl element");
}

WeylElement WeylGroup::from_word(const Word& q) const {
    WeylElement w = identity();
    for (int i : q) w = multiply_simple(w, i);
    return w;
}

int WeylGroup::length(const WeylElement& w) const {
    int inversions = 0;
    for (const RootVector& beta : positive_roots_)
        if (act(w, beta).is_negative()) ++inversions;
    return inversions;
}

bool WeylGroup::is_reduced(const Word& q) const {
    WeylElement u = identity();
    for (int i : q) {
        if (right_descent(u, i)) return false;  // u r_i < u
        u = multiply_simple(u, i);
    }
    return true;
}

bool WeylGroup::bruhat_leq(const WeylElement& w, const WeylElement& v) const {
    if (w.rank != rank() || v.rank != rank()) throw std::invalid_argument("element rank mismatch");
    if (v.is_identity()) return w.is_identity();
    auto key = std::make_pair(w.mat, v.mat);
    {
        std::shared_lock lock(bruhat_mutex_);
        auto it = bruhat_memo_.find(key);
        if (it != bruhat_memo_.end()) return it->second;
    }
    int i = *descents(v).begin();
    WeylElement vr = multiply_simple(v, i);
    bool result = right_descent(w, i) ? bruhat_leq(multiply_simple(w, i), vr) : bruhat_leq(w, vr);
    {
        std::unique_lock lock(bruhat_mutex_);
        bruhat_memo_.emplace(std::move(key), result);
    }
    return result;
}

WeylElement WeylGroup::demazure_product(const Word& q) const {
    WeylElement u = identity();
    for (int i : q) {
        check_letter(i);
        if (!right_descent(u, i)) u = multiply_simple(u, i);
    }
    return u;
}

std::vector<WeylElement> WeylGroup::all_elements(std::size_t cap) const {
    std::set<WeylElement> seen;
    std::vector<WeylElement> out;
    std::vector<WeylElement> layer{identity()};
    seen.insert(layer[0]);
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(), [&](const WeylElement& a, const WeylElement& b) {
            return canonical_reduced_word(a) < canonical_reduced_word(b);
        });
        out.insert(out.end(), layer.begin(), layer.end());
        if (out.size() > cap)
            throw std::length_error("group has more than " + std::to_string(cap) + " elements");
        std::vector<WeylElement> next;
        for (const WeylElement& u : layer)
            for (int i = 1; i <= rank(); ++i) {
                if (right_descent(u, i)) continue;  // stay on the up-set
                WeylElement ur = multiply_simple(u, i);
                if (seen.insert(ur).second) next.push_back(std::move(ur));
            }
        layer = std::move(next);
        if (out.size() + layer.size() > cap)
            throw std::length_error("group has more than " + std::to_string(cap) + " elements");
    }
    return out;
}

std::set<int> WeylGroup::descents(const WeylElement& v) const {
    std::set<int> d;
    for (int i = 1; i <= rank(); ++i)
        if (right_descent(v, i)) d.insert(i);
    return d;
}

Word WeylGroup::canonical_reduced_word(const WeylElement& v) const {
    Word emitted;
    WeylElement u = v;
    while (!u.is_identity()) {
        int i = 0;
        for (int j = 1; j <= rank(); ++j)
            if (right_descent(u, j)) {
                i = j;
                break;
            }
        emitted.push_back(i);
        u = multiply_simple(u, i);
    }
    std::reverse(emitted.begin(), emitted.end());
    return emitted;
}

std::vector<Word> WeylGroup::all_reduced_words(const WeylElement& v, std::optional<std::size_t> cap) const {
    // Lexicographic DFS on the leading letter: i can start a reduced word of
    // u exactly when r_i u < u, i.e. when i is a right descent of u^{-1}.
    std::vector<Word> out;
    Word prefix;
    auto dfs = [&](auto&& self, const WeylElement& u, const WeylElement& uinv) -> bool {
        if (u.is_identity()) {
            out.push_back(prefix);
            return !cap || out.size() < *cap;
        }
        for (int i = 1; i <= rank(); ++i) {
            if (!right_descent(uinv, i)) continue;
            prefix.push_back(i);
            bool keep_going = self(self, multiply(simple_[static_cast<std::size_t>(i - 1)], u),
                                   multiply_simple(uinv, i));
            prefix.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    dfs(dfs, v, inverse(v));
    return out;
}

std::vector<RootVector> WeylGroup::beta_sequence(const Word& q) const {
    if (!is_reduced(q)) throw std::invalid_argument("beta_sequence requires a reduced word");
    std::vector<RootVector> betas;
    betas.reserve(q.size());
    WeylElement prefix = identity();
    for (int i : q) {
        betas.push_back(act_on_simple(prefix, i));
        prefix = multiply_simple(prefix, i);
    }
    return betas;
}

}  // namespace schubkit
