#pragma once

// Exact sparse multivariate polynomial arithmetic with cpp_int coefficients.
// One representation serves three rings, distinguished by tag: Laurent
// polynomials in e^lambda over the root lattice (K_T(pt)), K-polynomials in
// the face variables q_1..q_k, and ordinary polynomials in the simple-root
// symbols a_1..a_rank (equivariant cohomology). Terms are kept in
// lexicographic exponent order with no zero coefficients stored.

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubkit/cartan.hpp"

namespace schubkit {

using Int = boost::multiprecision::cpp_int;

struct RootLatticeTag {
    static constexpr const char* exp_key = "exp";
    static std::string monomial_text(const std::vector<int>& e);
};
struct FaceVarTag {
    static constexpr const char* exp_key = "qexp";
    static std::string monomial_text(const std::vector<int>& e);
};
struct CohomologyTag {
    static constexpr const char* exp_key = "exp";
    static std::string monomial_text(const std::vector<int>& e);
};

template <class Tag>
class SparsePolynomial {
  public:
    using Exp = std::vector<int>;
    using Terms = std::map<Exp, Int>;

    explicit SparsePolynomial(int nvars = 0) : nvars_(nvars) {}

    static SparsePolynomial constant(int nvars, Int c) {
        SparsePolynomial p(nvars);
        p.add_term(Exp(static_cast<std::size_t>(nvars), 0), std::move(c));
        return p;
    }
    static SparsePolynomial monomial(Exp e, Int c) {
        SparsePolynomial p(static_cast<int>(e.size()));
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Exp& e, Int c) {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int sum_of_coefficients() const {  // evaluation at every variable -> 1
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator-(const SparsePolynomial& a) {
        SparsePolynomial r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        a.check_arity(b);
        SparsePolynomial r(a.nvars_);
        Exp e(static_cast<std::size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const Int& c) {
        SparsePolynomial r(a.nvars_);
        if (c != 0)
            for (const auto& [e, k] : a.terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

    // Reinterpret in a larger variable set, padding exponents with zeros.
    SparsePolynomial extended(int nvars) const {
        if (nvars < nvars_) throw std::invalid_argument("cannot shrink variable set");
        SparsePolynomial r(nvars);
        for (const auto& [e, c] : terms_) {
            Exp ee = e;
            ee.resize(static_cast<std::size_t>(nvars), 0);
            r.terms_.emplace(std::move(ee), c);
        }
        return r;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [e, c] : terms_) {
            nlohmann::json t;
            t[Tag::exp_key] = e;
            t["coeff"] = coeff_to_json(c);
            arr.push_back(std::move(t));
        }
        return arr;
    }

    static SparsePolynomial from_json(const nlohmann::json& j, int nvars) {
        SparsePolynomial p(nvars);
        for (const auto& t : j) {
            Exp e = t.at(Tag::exp_key).template get<Exp>();
            Int c(t.at("coeff").is_string() ? Int(t.at("coeff").get<std::string>())
                                            : Int(t.at("coeff").get<long long>()));
            p.add_term(e, std::move(c));
        }
        return p;
    }

    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            Int mag = c < 0 ? Int(-c) : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            std::string mono = Tag::monomial_text(e);
            if (mag != 1 || mono.empty()) out += mag.str();
            if (mag != 1 && !mono.empty()) out += "*";
            out += mono;
        }
        return out;
    }

  private:
    void check_arity(const SparsePolynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable arity mismatch");
    }
    static nlohmann::json coeff_to_json(const Int& c) {
        // Stays a JSON integer while it fits; huge values survive as strings.
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            return static_cast<long long>(c);
        return c.str();
    }

    int nvars_;
    Terms terms_;
};

using LaurentPolynomial = SparsePolynomial<RootLatticeTag>;
using QPolynomial = SparsePolynomial<FaceVarTag>;
using CohomologyPolynomial = SparsePolynomial<CohomologyTag>;

// e^lambda with coefficient 1.
inline LaurentPolynomial exp_of(const RootVector& lambda) {
    return LaurentPolynomial::monomial(lambda.coords, 1);
}

// 1 - e^lambda.
inline LaurentPolynomial one_minus_exp(const RootVector& lambda) {
    LaurentPolynomial p = LaurentPolynomial::constant(lambda.rank(), 1);
    p.add_term(lambda.coords, -1);
    return p;
}

// The degree-1 cohomology class with the coordinates of lambda.
inline CohomologyPolynomial linear_form(const RootVector& lambda) {
    CohomologyPolynomial p(lambda.rank());
    for (int i = 0; i < lambda.rank(); ++i) {
        int c = lambda.coords[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::vector<int> e(static_cast<std::size_t>(lambda.rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, c);
    }
    return p;
}

// Ring homomorphism q_j -> images[j]. `rank` fixes the target arity, which
// the images cannot determine when p is constant. Negative q-exponents are
// admitted only when the image is a unit monomial.
LaurentPolynomial specialize(const QPolynomial& p, std::span<const LaurentPolynomial> images, int rank);

// Value numerator / prod_{j in denominator_factors} (1 - q_j); equality is
// tested after clearing denominators.
struct HilbertSeries {
    QPolynomial numerator;
    std::vector<int> denominator_factors;  // variable indices j, 1-based, with multiplicity

    bool equals(const HilbertSeries& other) const;
};

}  // namespace schubkit
