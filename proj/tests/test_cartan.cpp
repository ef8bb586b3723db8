#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "schubkit/cartan.hpp"

using namespace schubkit;

namespace {

RootVector rv(std::vector<int> c) { return RootVector{std::move(c)}; }

}  // namespace

TEST_CASE("CartanType parsing and rank bounds") {
    CHECK(CartanType::parse("A3") == CartanType{Family::A, 3});
    CHECK(CartanType::parse("G2").to_string() == "G2");
    CHECK(CartanType::parse("E8").rank == 8);
    CHECK(CartanType::parse("B12").rank == 12);

    CHECK_THROWS_AS(CartanType::parse("A0"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("B1"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("C1"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("D2"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("E5"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("F3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("G3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("H2"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("A"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("2A"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse(""), std::invalid_argument);
}

TEST_CASE("Cartan matrices match the fixed conventions") {
    CHECK(cartan_matrix(CartanType::parse("A1")) == CartanMatrix{{2}});
    CHECK(cartan_matrix(CartanType::parse("A2")) == CartanMatrix{{2, -1}, {-1, 2}});
    CHECK(cartan_matrix(CartanType::parse("B2")) == CartanMatrix{{2, -1}, {-2, 2}});
    CHECK(cartan_matrix(CartanType::parse("C2")) == CartanMatrix{{2, -2}, {-1, 2}});
    CHECK(cartan_matrix(CartanType::parse("G2")) == CartanMatrix{{2, -1}, {-3, 2}});
    CHECK(cartan_matrix(CartanType::parse("F4")) ==
          CartanMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});

    for (const char* name : {"A4", "B3", "C3", "D4", "E6", "F4", "G2"}) {
        const CartanMatrix a = cartan_matrix(CartanType::parse(name));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (i == j)
                    CHECK(a[i][j] == 2);
                else
                    CHECK(a[i][j] <= 0);
            }
    }
}

TEST_CASE("reflect_simple on A2") {
    const CartanType a2 = CartanType::parse("A2");
    CHECK(reflect_simple(a2, 1, rv({1, 0})) == rv({-1, 0}));
    CHECK(reflect_simple(a2, 1, rv({0, 1})) == rv({1, 1}));
    CHECK(reflect_simple(a2, 2, rv({1, 0})) == rv({1, 1}));
    CHECK_THROWS_AS(reflect_simple(a2, 0, rv({1, 0})), std::out_of_range);
    CHECK_THROWS_AS(reflect_simple(a2, 3, rv({1, 0})), std::out_of_range);
}

TEST_CASE("reflect_simple is an involution") {
    for (const char* name : {"A2", "B2", "G2", "B3", "D4", "F4"}) {
        const CartanType type = CartanType::parse(name);
        const CartanMatrix a = cartan_matrix(type);
        std::vector<RootVector> samples = positive_roots(type);
        // a few vectors that are not roots
        RootVector mixed = RootVector::zero(type.rank);
        mixed.coords[0] = 3;
        if (type.rank > 1) mixed.coords[1] = -2;
        samples.push_back(mixed);
        samples.push_back(RootVector::zero(type.rank));
        for (int i = 1; i <= type.rank; ++i)
            for (const RootVector& x : samples) CHECK(reflect_simple(a, i, reflect_simple(a, i, x)) == x);
    }
}

TEST_CASE("positive root counts") {
    auto count = [](const char* name) { return positive_roots(CartanType::parse(name)).size(); };
    CHECK(count("A1") == 1);
    CHECK(count("A2") == 3);
    CHECK(count("A3") == 6);
    CHECK(count("B2") == 4);
    CHECK(count("B3") == 9);
    CHECK(count("G2") == 6);
    CHECK(count("F4") == 24);
    CHECK(count("C3") == 9);
    CHECK(count("D4") == 12);
    CHECK(count("E6") == 36);
    CHECK(count("E8") == 120);
}

TEST_CASE("A2 positive roots are the three expected ones") {
    const auto roots = positive_roots(CartanType::parse("A2"));
    CHECK(roots == std::vector<RootVector>{rv({0, 1}), rv({1, 0}), rv({1, 1})});
    CHECK(positive_roots(CartanType::parse("A1")) == std::vector<RootVector>{rv({1})});
}

TEST_CASE("every enumerated root is all-nonnegative or all-nonpositive") {
    for (const char* name : {"A3", "B3", "G2", "F4"}) {
        const CartanType type = CartanType::parse(name);
        for (const RootVector& beta : positive_roots(type)) {
            CHECK(beta.is_positive());
            CHECK((-beta).is_negative());
        }
    }
}

TEST_CASE("simple reflections permute the roots and fix the other positives") {
    for (const char* name : {"A2", "B2", "G2", "B3"}) {
        const CartanType type = CartanType::parse(name);
        const CartanMatrix a = cartan_matrix(type);
        const auto positives = positive_roots(type);
        std::set<RootVector> all_roots;
        for (const RootVector& beta : positives) {
            all_roots.insert(beta);
            all_roots.insert(-beta);
        }
        for (int i = 1; i <= type.rank; ++i) {
            std::set<RootVector> image;
            for (const RootVector& beta : all_roots) image.insert(reflect_simple(a, i, beta));
            CHECK(image == all_roots);
            for (const RootVector& beta : positives)
                if (beta != RootVector::simple(type.rank, i)) CHECK(reflect_simple(a, i, beta).is_positive());
        }
    }
}
