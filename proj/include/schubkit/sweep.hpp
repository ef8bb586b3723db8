#pragma once

// Exhaustive cross-validation sweeps: for every pair w <= v and every
// reduced word Q of v (up to a per-v cap), run the full battery of
// agreement and invariant checks. Deterministic instance order, optional
// round-robin parallelism.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubkit/weyl.hpp"

namespace schubkit {

struct SweepOptions {
    // 0 means no cap.
    std::size_t max_words_per_v = 5;
    int jobs = 1;
    std::size_t group_cap = WeylGroup::kDefaultGroupCap;
    // Optional filters restricting the sweep to matching instances; used by
    // failure reproducers.
    std::optional<Word> only_w;
    std::optional<Word> only_v;
    std::optional<Word> only_q;
};

struct SweepFailure {
    std::string check;
    Word w_word;
    Word v_word;
    Word q;
    std::string detail;

    std::string reproducer(const CartanType& type) const;
    nlohmann::json to_json(const CartanType& type) const;
};

struct SweepReport {
    CartanType type{Family::A, 1};
    std::size_t instances = 0;
    std::vector<SweepFailure> failures;
    double elapsed_seconds = 0.0;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;  // deterministic: no timing field
};

// Check names, as they appear in failure records:
//   three_way_restriction, vanishing, billey_vs_recursion, purity, ridges,
//   euler, interior_agreement, k_interior_identity, vertex_decomposition,
//   chain, boundary_class, descent_policy.
SweepReport run_sweep(const WeylGroup& group, const SweepOptions& options = {});

}  // namespace schubkit
