#pragma once

// Cartan-matrix data for the finite families A..G and the reflection action
// of simple roots on the root lattice. Everything is exact integer
// arithmetic; all vectors live in simple-root coordinates.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schubkit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Family family;
    int rank;

    // Parses "A3", "B2", "G2", ... Throws std::invalid_argument on anything
    // else, including a rank outside the family's bounds
    // (A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8}, F n=4, G n=2).
    static CartanType parse(std::string_view s);

    std::string to_string() const;

    friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Integer vector in the simple-root basis (alpha_i = i-th standard basis
// vector). Doubles as the exponent lattice for Laurent polynomials.
struct RootVector {
    std::vector<int> coords;

    RootVector() = default;
    explicit RootVector(std::vector<int> c) : coords(std::move(c)) {}
    static RootVector zero(int rank) { return RootVector(std::vector<int>(rank, 0)); }
    static RootVector simple(int rank, int i);  // alpha_i, i 1-based

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    // Sign tests. On actual roots the coordinates never mix signs, so these
    // are exhaustive there; on general vectors both can be false.
    bool is_positive() const;  // all >= 0, not zero
    bool is_negative() const;  // all <= 0, not zero

    friend RootVector operator+(const RootVector& a, const RootVector& b);
    friend RootVector operator-(const RootVector& a, const RootVector& b);
    friend RootVector operator-(const RootVector& a);
    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector& a, const RootVector& b) { return a.coords <=> b.coords; }

    std::string to_string() const;  // e.g. "a1+2a2", "0"
};

using CartanMatrix = std::vector<std::vector<int>>;

// Convention: A[i][j] = <alpha_j, alpha_i^vee>, so that
// r_i(alpha_j) = alpha_j - A[i][j] alpha_i. In the non-simply-laced types
// the orientation is B: alpha_n short, C: alpha_n long, F4: alpha_3, alpha_4
// short, G2: alpha_1 long; nothing downstream depends on it beyond root
// counts.
CartanMatrix cartan_matrix(const CartanType& type);

// r_i applied to x; an involution. i is 1-based.
RootVector reflect_simple(const CartanType& type, int i, const RootVector& x);
RootVector reflect_simple(const CartanMatrix& cartan, int i, const RootVector& x);

// The full set of positive roots, as the orbit closure of the simple roots
// under the simple reflections intersected with the nonnegative vectors.
// Sorted lexicographically.
std::vector<RootVector> positive_roots(const CartanType& type);

}  // namespace schubkit
