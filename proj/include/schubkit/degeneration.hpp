#pragma once

// The combinatorial degeneration chain: stage sets C_i of pairs (w', S), the
// step surjection C_{i-1} ->> C_i with its fiber trichotomy, and endpoint
// identification against the subword complex and the K-class restriction.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubkit/restriction.hpp"
#include "schubkit/weyl.hpp"

namespace schubkit {

// Pair (w', S) at stage i: S is a set of positions in {i+1,..,|Q|} whose
// letters, in increasing order, multiply w' up to w reducedly, with
// length(w') + |S| = length(w) and w' below the Demazure product of the
// first i letters.
struct ChainPair {
    WeylElement wprime;
    std::vector<int> positions;  // S, ascending, 1-based

    friend bool operator==(const ChainPair&, const ChainPair&) = default;
};

// All pairs of C_i by brute-force enumeration of the subsets of
// {i+1,..,|Q|}; deterministic order (canonical word of w', then S).
// Requires Q reduced, w <= from_word(Q), 0 <= i <= |Q|.
std::vector<ChainPair> chain_stage(const WeylGroup& group, const Word& q, const WeylElement& w, int i);

// The surjection C_{i-1} ->> C_i: (w',S) stays put when i is not in S and
// drops i onto w' r_alpha otherwise. Listed in chain_stage(i-1) order.
struct ChainStep {
    ChainPair from;
    ChainPair to;
};
std::vector<ChainStep> chain_step_map(const WeylGroup& group, const Word& q, const WeylElement& w, int i);

// Fiber of the step map over a pair of C_i, with the case of the trichotomy
// that produced it: 1 if w' r_alpha > w' (fiber is the pair itself), 2 if
// w' r_alpha < w' but w' is not below v_{i-1} (fiber is the dropped pair),
// 3 when both lift (fiber has two elements).
struct ChainFiber {
    int case_label = 0;
    std::vector<ChainPair> fiber;
};
ChainFiber fiber_trichotomy(const WeylGroup& group, const Word& q, const WeylElement& w, int i,
                            const ChainPair& pair);

// Full verification of the chain: per-stage invariants, surjectivity and
// fiber partition at every step, endpoint sets, and the endpoint K-class
// identity restrict_subword = restrict_kk. Optional shared tables speed up
// the restriction check inside sweeps.
struct ChainReport {
    bool ok = false;
    std::vector<std::size_t> stage_sizes;  // |C_0|, ..., |C_{l(v)}|
    std::vector<std::string> failures;     // each names the stage and pair

    nlohmann::json to_json() const;
};
ChainReport verify_chain(const WeylGroup& group, const Word& q, const WeylElement& w,
                         const RestrictionTables* tables = nullptr);

nlohmann::json chain_to_json(const WeylGroup& group, const Word& q, const WeylElement& w);

}  // namespace schubkit
