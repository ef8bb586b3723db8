#include "schubkit/degeneration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schubkit/subword.hpp"

namespace schubkit {

namespace {

struct ChainContext {
    const WeylGroup& group;
    const Word& q;
    WeylElement w;
    WeylElement v;
    int len_v;
    int len_w;
};

ChainContext make_context(const WeylGroup& group, const Word& q, const WeylElement& w) {
    if (!group.is_reduced(q)) throw std::invalid_argument("Q must be a reduced word");
    WeylElement v = group.from_word(q);
    if (!group.bruhat_leq(w, v)) throw std::invalid_argument("w must be <= from_word(Q)");
    return ChainContext{group, q, w, v, static_cast<int>(q.size()), group.length(w)};
}

WeylElement demazure_prefix(const ChainContext& ctx, int i) {
    Word prefix(ctx.q.begin(), ctx.q.begin() + i);
    return ctx.group.demazure_product(prefix);
}

std::vector<int> tail_subset_positions(int i, int len_v, unsigned bits) {
    std::vector<int> s;
    for (int p = i + 1; p <= len_v; ++p)
        if (bits & (1u << (p - i - 1))) s.push_back(p);
    return s;
}

bool pair_less(const WeylGroup& group, const ChainPair& a, const ChainPair& b) {
    Word wa = group.canonical_reduced_word(a.wprime);
    Word wb = group.canonical_reduced_word(b.wprime);
    if (wa != wb) return wa < wb;
    return a.positions < b.positions;
}

std::vector<ChainPair> stage_impl(const ChainContext& ctx, int i) {
    if (i < 0 || i > ctx.len_v) throw std::out_of_range("stage index out of range");
    const WeylElement v_i = demazure_prefix(ctx, i);
    const int tail = ctx.len_v - i;
    if (tail > 25) throw std::invalid_argument("word longer than supported (2^|Q| stage enumeration)");

    std::vector<ChainPair> out;
    for (unsigned bits = 0; bits < (1u << tail); ++bits) {
        std::vector<int> s = tail_subset_positions(i, ctx.len_v, bits);
        if (static_cast<int>(s.size()) > ctx.len_w) continue;
        // w' is forced by S: w' = w (prod S)^{-1}; membership reduces to the
        // length condition and w' <= v_i.
        WeylElement product_inv = ctx.group.identity();
        for (auto it = s.rbegin(); it != s.rend(); ++it)
            product_inv = ctx.group.multiply_simple(product_inv, ctx.q[static_cast<std::size_t>(*it - 1)]);
        WeylElement wprime = ctx.group.multiply(ctx.w, product_inv);
        if (ctx.group.length(wprime) + static_cast<int>(s.size()) != ctx.len_w) continue;
        if (!ctx.group.bruhat_leq(wprime, v_i)) continue;
        out.push_back(ChainPair{std::move(wprime), std::move(s)});
    }
    std::sort(out.begin(), out.end(),
              [&](const ChainPair& a, const ChainPair& b) { return pair_less(ctx.group, a, b); });
    return out;
}

ChainPair apply_step(const ChainContext& ctx, int i, const ChainPair& pair) {
    auto it = std::find(pair.positions.begin(), pair.positions.end(), i);
    if (it == pair.positions.end()) return pair;
    ChainPair next;
    next.wprime = ctx.group.multiply_simple(pair.wprime, ctx.q[static_cast<std::size_t>(i - 1)]);
    next.positions = pair.positions;
    next.positions.erase(std::find(next.positions.begin(), next.positions.end(), i));
    return next;
}

}  // namespace

std::vector<ChainPair> chain_stage(const WeylGroup& group, const Word& q, const WeylElement& w, int i) {
    return stage_impl(make_context(group, q, w), i);
}

std::vector<ChainStep> chain_step_map(const WeylGroup& group, const Word& q, const WeylElement& w, int i) {
    ChainContext ctx = make_context(group, q, w);
    if (i < 1 || i > ctx.len_v) throw std::out_of_range("step index out of range");
    std::vector<ChainStep> out;
    for (const ChainPair& pair : stage_impl(ctx, i - 1)) out.push_back({pair, apply_step(ctx, i, pair)});
    return out;
}

ChainFiber fiber_trichotomy(const WeylGroup& group, const Word& q, const WeylElement& w, int i,
                            const ChainPair& pair) {
    ChainContext ctx = make_context(group, q, w);
    if (i < 1 || i > ctx.len_v) throw std::out_of_range("step index out of range");
    {
        std::vector<ChainPair> stage_i = stage_impl(ctx, i);
        if (std::find(stage_i.begin(), stage_i.end(), pair) == stage_i.end())
            throw std::invalid_argument("pair is not in stage i");
    }
    const int alpha = q[static_cast<std::size_t>(i - 1)];
    const WeylElement v_prev = demazure_prefix(ctx, i - 1);
    ChainFiber out;
    ChainPair dropped;
    dropped.wprime = group.multiply_simple(pair.wprime, alpha);
    dropped.positions.reserve(pair.positions.size() + 1);
    dropped.positions.push_back(i);
    dropped.positions.insert(dropped.positions.end(), pair.positions.begin(), pair.positions.end());
    if (!group.right_descent(pair.wprime, alpha)) {
        out.case_label = 1;
        out.fiber = {pair};
    } else if (!group.bruhat_leq(pair.wprime, v_prev)) {
        out.case_label = 2;
        out.fiber = {std::move(dropped)};
    } else {
        out.case_label = 3;
        out.fiber = {pair, std::move(dropped)};
        std::sort(out.fiber.begin(), out.fiber.end(),
                  [&](const ChainPair& a, const ChainPair& b) { return pair_less(group, a, b); });
    }
    return out;
}

ChainReport verify_chain(const WeylGroup& group, const Word& q, const WeylElement& w,
                         const RestrictionTables* tables) {
    ChainContext ctx = make_context(group, q, w);
    ChainReport report;
    auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };
    auto pair_text = [&](const ChainPair& p) {
        return "(" + format_word(group.canonical_reduced_word(p.wprime)) + "; S=" + format_word(p.positions) +
               ")";
    };

    std::vector<std::vector<ChainPair>> stages;
    stages.reserve(static_cast<std::size_t>(ctx.len_v) + 1);
    for (int i = 0; i <= ctx.len_v; ++i) stages.push_back(stage_impl(ctx, i));
    for (const auto& st : stages) report.stage_sizes.push_back(st.size());

    // Per-stage invariants. The enumeration already enforced the length
    // condition and w' <= v_i; recheck the defining product and that S is a
    // reduced word for w'^{-1} w.
    for (int i = 0; i <= ctx.len_v; ++i) {
        const WeylElement v_i = demazure_prefix(ctx, i);
        for (const ChainPair& pair : stages[static_cast<std::size_t>(i)]) {
            const std::string where = "stage " + std::to_string(i) + " pair " + pair_text(pair);
            for (int p : pair.positions)
                if (p <= i || p > ctx.len_v) fail(where + ": position outside {i+1..l(v)}");
            if (!group.bruhat_leq(pair.wprime, v_i)) fail(where + ": w' not below v_i");
            Word sub;
            for (int p : pair.positions) sub.push_back(ctx.q[static_cast<std::size_t>(p - 1)]);
            if (group.multiply(pair.wprime, group.from_word(sub)) != ctx.w)
                fail(where + ": w' * prod(S) != w");
            if (group.length(pair.wprime) + static_cast<int>(sub.size()) != ctx.len_w)
                fail(where + ": length(w') + |S| != length(w)");
            if (!group.is_reduced(sub)) fail(where + ": S is not reduced");
            if (group.from_word(sub) != group.multiply(group.inverse(pair.wprime), ctx.w))
                fail(where + ": S is not a word for w'^{-1} w");
        }
    }

    // Step maps: well-defined, surjective, fibers partition and match the
    // trichotomy.
    for (int i = 1; i <= ctx.len_v; ++i) {
        const auto& prev = stages[static_cast<std::size_t>(i - 1)];
        const auto& curr = stages[static_cast<std::size_t>(i)];
        std::map<std::vector<int>, std::vector<ChainPair>> fibers_seen;  // keyed by target S + matrix
        auto key_of = [](const ChainPair& p) {
            std::vector<int> k = p.wprime.mat;
            k.insert(k.end(), p.positions.begin(), p.positions.end());
            return k;
        };
        std::size_t mapped = 0;
        for (const ChainPair& from : prev) {
            ChainPair to = apply_step(ctx, i, from);
            if (std::find(curr.begin(), curr.end(), to) == curr.end())
                fail("step " + std::to_string(i) + ": image of " + pair_text(from) + " not in stage");
            fibers_seen[key_of(to)].push_back(from);
            ++mapped;
        }
        if (fibers_seen.size() != curr.size())
            fail("step " + std::to_string(i) + ": map is not surjective");
        std::size_t fiber_total = 0;
        for (const ChainPair& target : curr) {
            auto it = fibers_seen.find(key_of(target));
            if (it == fibers_seen.end()) {
                fail("step " + std::to_string(i) + ": nothing maps to " + pair_text(target));
                continue;
            }
            std::vector<ChainPair> got = it->second;
            std::sort(got.begin(), got.end(),
                      [&](const ChainPair& a, const ChainPair& b) { return pair_less(group, a, b); });
            fiber_total += got.size();
            ChainFiber expected = fiber_trichotomy(group, q, w, i, target);
            if (got != expected.fiber)
                fail("step " + std::to_string(i) + ": fiber of " + pair_text(target) +
                     " does not match case " + std::to_string(expected.case_label));
            if (expected.fiber.size() > 2)
                fail("step " + std::to_string(i) + ": fiber larger than two");
        }
        if (fiber_total != mapped) fail("step " + std::to_string(i) + ": fibers do not partition");
    }

    // Endpoints.
    {
        const auto& last = stages.back();
        if (last.size() != 1 || last[0].wprime != ctx.w || !last[0].positions.empty())
            fail("stage l(v) is not {(w, {})}");
        SubwordComplex delta(group, q, ctx.w);
        std::vector<FaceMask> complements;
        for (const ChainPair& pair : stages.front()) {
            if (!pair.wprime.is_identity()) fail("stage 0 pair with w' != 1");
            FaceMask s_mask = positions_to_mask(pair.positions, ctx.len_v);
            complements.push_back(~s_mask & ((ctx.len_v == 0 ? 0 : (FaceMask{1} << ctx.len_v) - 1)));
        }
        std::sort(complements.begin(), complements.end());
        if (complements != delta.facets()) fail("stage 0 complements do not match the facets");

        const LaurentPolynomial via_complex = restrict_subword(group, delta);
        const LaurentPolynomial via_recursion =
            tables ? tables->restrict_kk(ctx.w, ctx.v) : restrict_kk(group, ctx.w, ctx.v);
        if (via_complex != via_recursion) fail("endpoint K-classes differ");
    }

    report.ok = report.failures.empty();
    return report;
}

nlohmann::json ChainReport::to_json() const {
    nlohmann::json j;
    j["ok"] = ok;
    j["stage_sizes"] = stage_sizes;
    j["failures"] = failures;
    return j;
}

nlohmann::json chain_to_json(const WeylGroup& group, const Word& q, const WeylElement& w) {
    ChainContext ctx = make_context(group, q, w);
    nlohmann::json j;
    nlohmann::json stages = nlohmann::json::array();
    for (int i = 0; i <= ctx.len_v; ++i) {
        nlohmann::json stage;
        stage["i"] = i;
        nlohmann::json pairs = nlohmann::json::array();
        for (const ChainPair& pair : stage_impl(ctx, i)) {
            nlohmann::json p;
            p["wprime_word"] = group.canonical_reduced_word(pair.wprime);
            p["S"] = pair.positions;
            pairs.push_back(std::move(p));
        }
        stage["pairs"] = std::move(pairs);
        stages.push_back(std::move(stage));
    }
    j["stages"] = std::move(stages);

    nlohmann::json surjections = nlohmann::json::array();
    for (int i = 1; i <= ctx.len_v; ++i) {
        const auto prev = stage_impl(ctx, i - 1);
        const auto curr = stage_impl(ctx, i);
        nlohmann::json step;
        step["i"] = i;
        nlohmann::json arrows = nlohmann::json::array();
        for (std::size_t a = 0; a < prev.size(); ++a) {
            ChainPair to = apply_step(ctx, i, prev[a]);
            auto it = std::find(curr.begin(), curr.end(), to);
            arrows.push_back({a, it == curr.end() ? -1 : static_cast<long long>(it - curr.begin())});
        }
        step["map"] = std::move(arrows);
        surjections.push_back(std::move(step));
    }
    j["surjections"] = std::move(surjections);
    j["checks"] = verify_chain(group, q, w).to_json();
    return j;
}

}  // namespace schubkit
