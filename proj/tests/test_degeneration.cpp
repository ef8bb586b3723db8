#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "schubkit/degeneration.hpp"

using namespace schubkit;

namespace {

ChainPair pair_of(const WeylGroup& g, const Word& wprime, std::vector<int> s) {
    return ChainPair{g.from_word(wprime), std::move(s)};
}

bool same_pairs(std::vector<ChainPair> a, std::vector<ChainPair> b) {
    auto key = [](const ChainPair& p) { return std::make_pair(p.wprime.mat, p.positions); };
    auto less = [&](const ChainPair& x, const ChainPair& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

}  // namespace

TEST_CASE("stage sets for A2, Q = (1,2,1), w = s1") {
    const WeylGroup g(CartanType::parse("A2"));
    const Word q{1, 2, 1};
    const WeylElement w = g.simple_reflection(1);

    CHECK(same_pairs(chain_stage(g, q, w, 0), {pair_of(g, {}, {1}), pair_of(g, {}, {3})}));
    CHECK(same_pairs(chain_stage(g, q, w, 1), {pair_of(g, {1}, {}), pair_of(g, {}, {3})}));
    CHECK(same_pairs(chain_stage(g, q, w, 2), {pair_of(g, {1}, {}), pair_of(g, {}, {3})}));
    CHECK(same_pairs(chain_stage(g, q, w, 3), {pair_of(g, {1}, {})}));

    CHECK_THROWS_AS(chain_stage(g, q, w, -1), std::out_of_range);
    CHECK_THROWS_AS(chain_stage(g, q, w, 4), std::out_of_range);
    CHECK_THROWS_AS(chain_stage(g, {1, 1}, w, 0), std::invalid_argument);
    CHECK_THROWS_AS(chain_stage(g, {2}, w, 0), std::invalid_argument);  // w not below v
}

TEST_CASE("endpoint stages") {
    const WeylGroup g(CartanType::parse("A2"));
    const Word q{1, 2, 1};
    const WeylElement w = g.simple_reflection(1);

    // top: {(w, {})}
    const auto top = chain_stage(g, q, w, 3);
    REQUIRE(top.size() == 1);
    CHECK(top[0].wprime == w);
    CHECK(top[0].positions.empty());

    // bottom: the S are exactly the reduced words of w inside Q
    const auto bottom = chain_stage(g, q, w, 0);
    for (const ChainPair& p : bottom) {
        CHECK(p.wprime.is_identity());
        Word sub;
        for (int pos : p.positions) sub.push_back(q[static_cast<std::size_t>(pos - 1)]);
        CHECK(g.is_reduced(sub));
        CHECK(g.from_word(sub) == w);
    }
}

TEST_CASE("step map lands on the next stage") {
    const WeylGroup g(CartanType::parse("A2"));
    const Word q{1, 2, 1};
    const WeylElement w = g.simple_reflection(1);

    const auto steps = chain_step_map(g, q, w, 3);
    REQUIRE(steps.size() == 2);
    for (const ChainStep& step : steps) {
        CHECK(step.to.wprime == w);
        CHECK(step.to.positions.empty());
    }
    // when no source uses position i, the map is the identity on pairs
    const auto steps2 = chain_step_map(g, q, w, 2);
    for (const ChainStep& step : steps2)
        if (std::find(step.from.positions.begin(), step.from.positions.end(), 2) ==
            step.from.positions.end())
            CHECK(step.from == step.to);
}

TEST_CASE("fiber trichotomy") {
    const WeylGroup g(CartanType::parse("A2"));

    // case 3: both lifts
    {
        const Word q{1, 2, 1};
        const WeylElement w = g.simple_reflection(1);
        const ChainFiber fiber = fiber_trichotomy(g, q, w, 3, pair_of(g, {1}, {}));
        CHECK(fiber.case_label == 3);
        CHECK(same_pairs(fiber.fiber, {pair_of(g, {1}, {}), pair_of(g, {}, {3})}));
    }
    // case 2: forced drop
    {
        const Word q{1, 2};
        const WeylElement w = g.simple_reflection(2);
        const ChainFiber fiber = fiber_trichotomy(g, q, w, 2, pair_of(g, {2}, {}));
        CHECK(fiber.case_label == 2);
        CHECK(same_pairs(fiber.fiber, {pair_of(g, {}, {2})}));
    }
    // case 1: w' goes up, fiber is the pair itself
    {
        const Word q{1, 2};
        const WeylElement w = g.simple_reflection(2);
        const ChainFiber fiber = fiber_trichotomy(g, q, w, 1, pair_of(g, {}, {2}));
        CHECK(fiber.case_label == 1);
        CHECK(same_pairs(fiber.fiber, {pair_of(g, {}, {2})}));
    }
    // fibers never exceed two elements, across a whole group
    {
        const WeylGroup b2(CartanType::parse("B2"));
        const auto elements = b2.all_elements();
        for (const WeylElement& v : elements) {
            const Word q = b2.canonical_reduced_word(v);
            for (const WeylElement& w : elements) {
                if (!b2.bruhat_leq(w, v)) continue;
                for (int i = 1; i <= static_cast<int>(q.size()); ++i)
                    for (const ChainPair& p : chain_stage(b2, q, w, i)) {
                        const ChainFiber fiber = fiber_trichotomy(b2, q, w, i, p);
                        CHECK(fiber.fiber.size() >= 1);
                        CHECK(fiber.fiber.size() <= 2);
                    }
            }
        }
    }

    const Word q{1, 2, 1};
    CHECK_THROWS_AS(fiber_trichotomy(g, q, g.simple_reflection(1), 3, pair_of(g, {2}, {})),
                    std::invalid_argument);
}

TEST_CASE("verify_chain on the A2 example") {
    const WeylGroup g(CartanType::parse("A2"));
    const ChainReport report = verify_chain(g, {1, 2, 1}, g.simple_reflection(1));
    CHECK(report.ok);
    CHECK(report.stage_sizes == std::vector<std::size_t>{2, 2, 2, 1});
}

TEST_CASE("verify_chain degenerate endpoints") {
    const WeylGroup g(CartanType::parse("A2"));

    // w = v: every stage is the singleton (v_i, {i+1..l(v)})
    {
        const Word q{1, 2};
        const WeylElement v = g.from_word(q);
        const ChainReport report = verify_chain(g, q, v);
        CHECK(report.ok);
        CHECK(report.stage_sizes == std::vector<std::size_t>{1, 1, 1});
        CHECK(same_pairs(chain_stage(g, q, v, 0), {pair_of(g, {}, {1, 2})}));
        CHECK(same_pairs(chain_stage(g, q, v, 1), {pair_of(g, {1}, {2})}));
        CHECK(same_pairs(chain_stage(g, q, v, 2), {pair_of(g, {1, 2}, {})}));
    }
    // w = 1: all stages are {(1, {})}
    {
        const Word q{1, 2, 1};
        const ChainReport report = verify_chain(g, q, g.identity());
        CHECK(report.ok);
        CHECK(report.stage_sizes == std::vector<std::size_t>{1, 1, 1, 1});
        for (int i = 0; i <= 3; ++i)
            CHECK(same_pairs(chain_stage(g, q, g.identity(), i), {pair_of(g, {}, {})}));
    }
}

TEST_CASE("verify_chain across all of B2") {
    const WeylGroup g(CartanType::parse("B2"));
    const auto elements = g.all_elements();
    for (const WeylElement& v : elements)
        for (const Word& q : g.all_reduced_words(v))
            for (const WeylElement& w : elements) {
                if (!g.bruhat_leq(w, v)) continue;
                CHECK(verify_chain(g, q, w).ok);
            }
}

TEST_CASE("chain JSON shape") {
    const WeylGroup g(CartanType::parse("A2"));
    const auto j = chain_to_json(g, {1, 2, 1}, g.simple_reflection(1));
    CHECK(j.at("stages").size() == 4);
    CHECK(j.at("stages")[0].at("i") == 0);
    CHECK(j.at("stages")[0].at("pairs").size() == 2);
    CHECK(j.at("surjections").size() == 3);
    CHECK(j.at("checks").at("ok") == true);
    // deterministic pair order: sorted by canonical word then S
    CHECK(j.at("stages")[1].at("pairs")[0].at("wprime_word") == nlohmann::json::array());
    CHECK(j.at("stages")[1].at("pairs")[0].at("S") == nlohmann::json({3}));
}
