#include "schubkit/polynomial.hpp"

#include <algorithm>

namespace schubkit {

std::string RootLatticeTag::monomial_text(const std::vector<int>& e) {
    RootVector v{e};
    if (v.is_zero()) return "";
    return "e^{" + v.to_string() + "}";
}

namespace {

std::string power_product_text(const std::vector<int>& e, const char* var) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var + std::to_string(i + 1);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string FaceVarTag::monomial_text(const std::vector<int>& e) { return power_product_text(e, "q"); }
std::string CohomologyTag::monomial_text(const std::vector<int>& e) { return power_product_text(e, "a"); }

LaurentPolynomial specialize(const QPolynomial& p, std::span<const LaurentPolynomial> images, int rank) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("specialize: got " + std::to_string(images.size()) + " images for " +
                                    std::to_string(p.nvars()) + " variables");
    for (const LaurentPolynomial& im : images)
        if (im.nvars() != rank) throw std::invalid_argument("specialize: image arity mismatch");

    auto power = [&](const LaurentPolynomial& base, int n) {
        if (n < 0) {
            if (base.num_terms() != 1) throw std::invalid_argument("negative exponent of a non-monomial image");
            const auto& [e, c] = *base.terms().begin();
            if (c != 1 && c != -1) throw std::invalid_argument("negative exponent of a non-unit image");
            std::vector<int> pow_exp(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) pow_exp[i] = n * e[i];
            return LaurentPolynomial::monomial(std::move(pow_exp), (c == 1 || n % 2 == 0) ? Int(1) : Int(-1));
        }
        LaurentPolynomial acc = LaurentPolynomial::constant(rank, 1);
        for (int k = 0; k < n; ++k) acc *= base;
        return acc;
    };

    LaurentPolynomial out(rank);
    for (const auto& [e, c] : p.terms()) {
        LaurentPolynomial term = LaurentPolynomial::constant(rank, c);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0) term *= power(images[j], e[j]);
        out += term;
    }
    return out;
}

bool HilbertSeries::equals(const HilbertSeries& other) const {
    int nvars = std::max(numerator.nvars(), other.numerator.nvars());
    for (int j : denominator_factors) nvars = std::max(nvars, j);
    for (int j : other.denominator_factors) nvars = std::max(nvars, j);

    auto one_minus_q = [&](int j) {
        QPolynomial p = QPolynomial::constant(nvars, 1);
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(j - 1)] = 1;
        p.add_term(e, -1);
        return p;
    };

    QPolynomial lhs = numerator.extended(nvars);
    for (int j : other.denominator_factors) lhs *= one_minus_q(j);
    QPolynomial rhs = other.numerator.extended(nvars);
    for (int j : denominator_factors) rhs *= one_minus_q(j);
    return lhs == rhs;
}

}  // namespace schubkit
