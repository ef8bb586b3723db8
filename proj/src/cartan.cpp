#include "schubkit/cartan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubkit {

namespace {

void check_rank(Family f, int n) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n == 6 || n == 7 || n == 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok)
        throw std::invalid_argument("rank " + std::to_string(n) + " out of bounds for family " +
                                    std::string(1, static_cast<char>(f)));
}

}  // namespace

CartanType CartanType::parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("cannot parse Cartan type '" + std::string(s) + "'");
    char f = s[0];
    if (f < 'A' || f > 'G') throw std::invalid_argument("unknown family '" + std::string(1, f) + "'");
    int n = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("cannot parse Cartan type '" + std::string(s) + "'");
        n = n * 10 + (s[i] - '0');
        if (n > 1000) throw std::invalid_argument("rank too large in '" + std::string(s) + "'");
    }
    CartanType t{static_cast<Family>(f), n};
    check_rank(t.family, t.rank);
    return t;
}

std::string CartanType::to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

RootVector RootVector::simple(int rank, int i) {
    RootVector v = zero(rank);
    v.coords.at(static_cast<std::size_t>(i - 1)) = 1;
    return v;
}

bool RootVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool RootVector::is_positive() const {
    bool nonzero = false;
    for (int c : coords) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

bool RootVector::is_negative() const {
    bool nonzero = false;
    for (int c : coords) {
        if (c > 0) return false;
        if (c < 0) nonzero = true;
    }
    return nonzero;
}

RootVector operator+(const RootVector& a, const RootVector& b) {
    if (a.coords.size() != b.coords.size()) throw std::invalid_argument("rank mismatch");
    RootVector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

RootVector operator-(const RootVector& a, const RootVector& b) {
    if (a.coords.size() != b.coords.size()) throw std::invalid_argument("rank mismatch");
    RootVector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

RootVector operator-(const RootVector& a) {
    RootVector r = a;
    for (int& c : r.coords) c = -c;
    return r;
}

std::string RootVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        int c = coords[i];
        if (c == 0) continue;
        if (!out.empty() && c > 0) out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += std::to_string(c);
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

CartanMatrix cartan_matrix(const CartanType& type) {
    check_rank(type.family, type.rank);
    const int n = type.rank;
    CartanMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto connect = [&](int i, int j) {  // 1-based, simply laced bond
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    switch (type.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) connect(i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i < n; ++i) connect(i, i + 1);
            a[n - 1][n - 2] = -2;  // alpha_n short
            break;
        case Family::C:
            for (int i = 1; i < n; ++i) connect(i, i + 1);
            a[n - 2][n - 1] = -2;  // alpha_n long
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) connect(i, i + 1);
            connect(n - 2, n);
            break;
        case Family::E:
            connect(1, 3);
            connect(2, 4);
            for (int i = 3; i < n; ++i) connect(i, i + 1);
            break;
        case Family::F:
            connect(1, 2);
            connect(2, 3);
            connect(3, 4);
            a[2][1] = -2;  // alpha_3 short
            break;
        case Family::G:
            connect(1, 2);
            a[1][0] = -3;  // alpha_2 short
            break;
    }
    return a;
}

RootVector reflect_simple(const CartanMatrix& cartan, int i, const RootVector& x) {
    const int n = static_cast<int>(cartan.size());
    if (i < 1 || i > n) throw std::out_of_range("simple index out of range");
    if (x.rank() != n) throw std::invalid_argument("rank mismatch");
    const auto& row = cartan[static_cast<std::size_t>(i - 1)];
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += row[static_cast<std::size_t>(j)] * x.coords[static_cast<std::size_t>(j)];
    RootVector r = x;
    r.coords[static_cast<std::size_t>(i - 1)] -= pairing;
    return r;
}

RootVector reflect_simple(const CartanType& type, int i, const RootVector& x) {
    return reflect_simple(cartan_matrix(type), i, x);
}

std::vector<RootVector> positive_roots(const CartanType& type) {
    const CartanMatrix a = cartan_matrix(type);
    const int n = type.rank;
    std::set<RootVector> roots;
    std::vector<RootVector> queue;
    for (int i = 1; i <= n; ++i) {
        RootVector s = RootVector::simple(n, i);
        roots.insert(s);
        queue.push_back(s);
    }
    while (!queue.empty()) {
        RootVector x = queue.back();
        queue.pop_back();
        for (int i = 1; i <= n; ++i) {
            RootVector y = reflect_simple(a, i, x);
            if (roots.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<RootVector> positive;
    for (const RootVector& r : roots)
        if (r.is_positive()) positive.push_back(r);
    return positive;  // std::set iteration is already lexicographic
}

}  // namespace schubkit
