#include "schubkit/sweep.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>

#include "schubkit/degeneration.hpp"
#include "schubkit/restriction.hpp"
#include "schubkit/subword.hpp"

namespace schubkit {

namespace {

struct Instance {
    const WeylElement* w;
    const WeylElement* v;
    Word q;
    bool first_for_pair;  // run the per-pair checks on this instance only
};

void check_instance(const WeylGroup& group, const RestrictionTables& tables, const Instance& inst,
                    std::vector<SweepFailure>& out) {
    const WeylElement& w = *inst.w;
    const WeylElement& v = *inst.v;
    const Word w_word = group.canonical_reduced_word(w);
    const Word v_word = group.canonical_reduced_word(v);
    auto fail = [&](const char* check, std::string detail) {
        out.push_back(SweepFailure{check, w_word, v_word, inst.q, std::move(detail)});
    };

    SubwordComplex delta(group, inst.q, w);
    const int expected_facet_size = static_cast<int>(inst.q.size()) - group.length(w);

    for (FaceMask f : delta.facets())
        if (std::popcount(f) != expected_facet_size) {
            fail("purity", "facet of size " + std::to_string(std::popcount(f)));
            break;
        }

    if (!delta.is_void()) {
        const int ridge_size = delta.facet_size() - 1;
        if (ridge_size >= 0)
            for (FaceMask r : delta.all_faces()) {
                if (std::popcount(r) != ridge_size) continue;
                int in_facets = 0;
                for (FaceMask f : delta.facets())
                    if ((r & ~f) == 0) ++in_facets;
                if (in_facets < 1 || in_facets > 2) {
                    fail("ridges", "ridge in " + std::to_string(in_facets) + " facets");
                    break;
                }
            }
    }

    if (w != v && delta.euler_characteristic() != 1)
        fail("euler", "chi = " + std::to_string(delta.euler_characteristic()));

    if (delta.interior_faces_demazure() != delta.interior_faces_topological())
        fail("interior_agreement", "Demazure and topological interiors differ");

    if (delta.k_polynomial_interior() != delta.k_polynomial())
        fail("k_interior_identity", "interior expansion != K-polynomial");

    const LaurentPolynomial r_kk = tables.restrict_kk(w, v);
    const LaurentPolynomial r_sub = restrict_subword(group, delta);
    const LaurentPolynomial r_gw = restrict_graham_willems(group, delta);
    if (r_kk != r_sub) fail("three_way_restriction", "recursion != subword specialization");
    if (r_kk != r_gw) fail("three_way_restriction", "recursion != interior-face sum");
    if (r_kk.is_zero()) fail("vanishing", "restriction vanishes although w <= v");

    const CohomologyPolynomial sigma = billey_restriction(group, delta);
    if (sigma != tables.cohomology_recursion(w, v))
        fail("billey_vs_recursion", "facet sum != cohomology recursion");
    if (sigma.is_zero()) fail("billey_vs_recursion", "facet sum vanishes although w <= v");

    {
        std::vector<LaurentPolynomial> images;
        for (const RootVector& beta : group.beta_sequence(inst.q)) images.push_back(exp_of(-beta));
        const LaurentPolynomial direct = boundary_ideal_class(group, delta);
        const LaurentPolynomial via_k = specialize(delta.k_polynomial(), images, group.rank()) -
                                        specialize(delta.boundary_k_polynomial(), images, group.rank());
        if (direct != via_k) fail("boundary_class", "all-faces sum != k(Delta) - k(boundary)");
    }

    if (!v.is_identity()) {
        VertexDecompositionReport vd = verify_vertex_decomposition(group, inst.q, w);
        if (!vd.ok) fail("vertex_decomposition", vd.problems.front());
    }

    {
        ChainReport chain = verify_chain(group, inst.q, w, &tables);
        if (!chain.ok) fail("chain", chain.failures.front());
    }

    if (inst.first_for_pair) {
        if (tables.restrict_kk(w, v, DescentPolicy::SmallestIndex) !=
            tables.restrict_kk(w, v, DescentPolicy::LargestIndex))
            fail("descent_policy", "restriction depends on the descent choice");
    }
}

}  // namespace

std::string SweepFailure::reproducer(const CartanType& type) const {
    return "schubkit sweep --type " + type.to_string() + " --w \"" + format_word(w_word) + "\" --v \"" +
           format_word(v_word) + "\" --word \"" + format_word(q) + "\"";
}

nlohmann::json SweepFailure::to_json(const CartanType& type) const {
    nlohmann::json j;
    j["check"] = check;
    j["w_word"] = w_word;
    j["v_word"] = v_word;
    j["Q"] = q;
    j["detail"] = detail;
    j["reproducer"] = reproducer(type);
    return j;
}

nlohmann::json SweepReport::to_json() const {
    nlohmann::json j;
    j["group"] = type.to_string();
    j["instances"] = instances;
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepFailure& f : failures) arr.push_back(f.to_json(type));
    j["failures"] = std::move(arr);
    return j;
}

SweepReport run_sweep(const WeylGroup& group, const SweepOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.type = group.type();

    const std::vector<WeylElement> elements = group.all_elements(options.group_cap);
    std::optional<std::size_t> cap;
    if (options.max_words_per_v > 0) cap = options.max_words_per_v;
    std::optional<WeylElement> only_w, only_v;
    if (options.only_w) only_w = group.from_word(*options.only_w);
    if (options.only_v) only_v = group.from_word(*options.only_v);

    std::vector<Instance> instances;
    for (const WeylElement& v : elements) {
        if (only_v && *only_v != v) continue;
        const std::vector<Word> words = group.all_reduced_words(v, cap);
        for (const WeylElement& w : elements) {
            if (!group.bruhat_leq(w, v)) continue;
            if (only_w && *only_w != w) continue;
            bool first = true;
            for (const Word& q : words) {
                if (options.only_q && *options.only_q != q) continue;
                instances.push_back(Instance{&w, &v, q, first});
                first = false;
            }
        }
    }
    report.instances = instances.size();

    RestrictionTables tables(group);
    std::vector<std::vector<SweepFailure>> per_instance(instances.size());
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            check_instance(group, tables, instances[i], per_instance[i]);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&, t] {
                try {
                    for (std::size_t i = static_cast<std::size_t>(t); i < instances.size();
                         i += static_cast<std::size_t>(jobs))
                        check_instance(group, tables, instances[i], per_instance[i]);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        for (std::thread& worker : workers) worker.join();
        for (const std::exception_ptr& error : errors)
            if (error) std::rethrow_exception(error);
    }
    for (auto& failures : per_instance)
        report.failures.insert(report.failures.end(), failures.begin(), failures.end());

    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace schubkit
