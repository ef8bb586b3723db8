// schubkit command-line front end: single restrictions, complex inspection,
// chain verification and full cross-validation sweeps.
//
// Exit codes: 0 success, 1 mathematical mismatch, 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "schubkit/degeneration.hpp"
#include "schubkit/restriction.hpp"
#include "schubkit/subword.hpp"
#include "schubkit/sweep.hpp"
#include "schubkit/weyl.hpp"

namespace {

using namespace schubkit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
    std::string type;
    std::string format = "text";
};

json wrap_result(const CartanType& type, const WeylGroup& group, const WeylElement& w, const WeylElement& v,
                 const Word& q, const std::string& method, json value) {
    json j;
    j["type"] = type.to_string();
    j["w_word"] = group.canonical_reduced_word(w);
    j["v_word"] = group.canonical_reduced_word(v);
    j["Q"] = q;
    j["method"] = method;
    j["value"] = std::move(value);
    return j;
}

int cmd_restrict(const CommonArgs& common, const std::string& w_str, const std::string& v_str,
                 const std::string& q_str, bool q_given, const std::string& method) {
    const CartanType type = CartanType::parse(common.type);
    const WeylGroup group(type);
    const WeylElement w = group.from_word(parse_word(w_str));
    const WeylElement v = group.from_word(parse_word(v_str));
    Word q = q_given ? parse_word(q_str) : group.canonical_reduced_word(v);
    if (!group.is_reduced(q) || group.from_word(q) != v)
        throw CLI::ValidationError("--word", "Q must be a reduced word for v");

    LaurentPolynomial value(group.rank());
    if (method == "kk") {
        value = restrict_kk(group, w, v);
    } else if (method == "subword") {
        value = restrict_subword(group, w, v, q);
    } else if (method == "gw") {
        value = restrict_graham_willems(group, w, v, q);
    } else {  // all
        value = restrict_kk(group, w, v);
        const LaurentPolynomial via_subword = restrict_subword(group, w, v, q);
        const LaurentPolynomial via_gw = restrict_graham_willems(group, w, v, q);
        if (via_subword != value || via_gw != value) {
            std::cerr << "method disagreement:\n  kk      = " << value.to_text()
                      << "\n  subword = " << via_subword.to_text() << "\n  gw      = " << via_gw.to_text()
                      << "\n";
            return kExitMismatch;
        }
    }
    if (common.format == "json")
        std::cout << wrap_result(type, group, w, v, q, method, value.to_json()).dump() << "\n";
    else
        std::cout << value.to_text() << "\n";
    return kExitOk;
}

int cmd_complex(const CommonArgs& common, const std::string& q_str, const std::string& w_str) {
    const CartanType type = CartanType::parse(common.type);
    const WeylGroup group(type);
    const Word q = parse_word(q_str);
    const WeylElement w = group.from_word(parse_word(w_str));
    const SubwordComplex delta(group, q, w);
    const WeylElement v = delta.word_product();

    const auto faces = delta.all_faces();
    const auto interior = delta.interior_faces_demazure();
    bool purity_ok = true;
    for (FaceMask f : delta.facets())
        purity_ok = purity_ok &&
                    mask_to_positions(f).size() ==
                        static_cast<std::size_t>(delta.num_positions() - group.length(w));
    bool ridges_ok = delta.interior_faces_topological() == interior;

    int vd_case = 0;
    bool vd_ok = true;
    if (!v.is_identity() && !delta.is_void()) {
        VertexDecompositionReport vd = verify_vertex_decomposition(group, q, w);
        vd_case = vd.case_label;
        vd_ok = vd.ok;
    }

    if (common.format == "json") {
        json j = delta.to_json();
        j["void"] = delta.is_void();
        j["num_faces"] = faces.size();
        j["euler"] = delta.euler_characteristic();
        j["purity_ok"] = purity_ok;
        j["ridges_ok"] = ridges_ok;
        j["k_polynomial"] = delta.k_polynomial().to_json();
        if (vd_case != 0) {
            j["vd_case"] = vd_case;
            j["vd_ok"] = vd_ok;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "Delta(Q, w) with Q = (" << format_word(q) << "), w = ("
                  << format_word(group.canonical_reduced_word(w)) << ")\n";
        if (delta.is_void()) std::cout << "void complex (w is not below the product of Q)\n";
        std::cout << "facets: " << faces_to_json(delta.facets()).dump() << "\n";
        std::cout << "faces: " << faces.size() << "\n";
        std::cout << "interior: " << faces_to_json(interior).dump() << "\n";
        std::cout << "euler: " << delta.euler_characteristic() << "\n";
        std::cout << "k-polynomial: " << delta.k_polynomial().to_text() << "\n";
        std::cout << "purity: " << (purity_ok ? "ok" : "FAIL") << ", interior characterizations: "
                  << (ridges_ok ? "agree" : "DISAGREE") << "\n";
        if (vd_case != 0)
            std::cout << "vertex decomposition at the last letter: case " << vd_case << " "
                      << (vd_ok ? "(checks pass)" : "(CHECKS FAIL)") << "\n";
    }
    return (purity_ok && ridges_ok && vd_ok) ? kExitOk : kExitMismatch;
}

int cmd_chain(const CommonArgs& common, const std::string& q_str, const std::string& w_str) {
    const CartanType type = CartanType::parse(common.type);
    const WeylGroup group(type);
    const Word q = parse_word(q_str);
    const WeylElement w = group.from_word(parse_word(w_str));
    const ChainReport report = verify_chain(group, q, w);

    if (common.format == "json") {
        std::cout << chain_to_json(group, q, w).dump() << "\n";
    } else {
        std::cout << "stages: " << report.stage_sizes.size() << ", sizes:";
        for (std::size_t s : report.stage_sizes) std::cout << " " << s;
        std::cout << "\n";
        if (report.ok) {
            std::cout << "all chain checks pass\n";
        } else {
            for (const std::string& f : report.failures) std::cout << "FAIL: " << f << "\n";
        }
    }
    return report.ok ? kExitOk : kExitMismatch;
}

int cmd_billey(const CommonArgs& common, const std::string& w_str, const std::string& v_str,
               const std::string& q_str, bool q_given) {
    const CartanType type = CartanType::parse(common.type);
    const WeylGroup group(type);
    const WeylElement w = group.from_word(parse_word(w_str));
    const WeylElement v = group.from_word(parse_word(v_str));
    Word q = q_given ? parse_word(q_str) : group.canonical_reduced_word(v);
    if (!group.is_reduced(q) || group.from_word(q) != v)
        throw CLI::ValidationError("--word", "Q must be a reduced word for v");

    const CohomologyPolynomial via_facets = billey_restriction(group, w, v, q);
    const CohomologyPolynomial via_recursion = restrict_cohomology_recursion(group, w, v);
    if (via_facets != via_recursion) {
        std::cerr << "method disagreement:\n  facets    = " << via_facets.to_text()
                  << "\n  recursion = " << via_recursion.to_text() << "\n";
        return kExitMismatch;
    }
    if (common.format == "json")
        std::cout << wrap_result(type, group, w, v, q, "billey", via_facets.to_json()).dump() << "\n";
    else
        std::cout << via_facets.to_text() << "\n";
    return kExitOk;
}

int cmd_sweep(const CommonArgs& common, const SweepOptions& options) {
    const CartanType type = CartanType::parse(common.type);
    const WeylGroup group(type);
    const SweepReport report = run_sweep(group, options);

    if (common.format == "json") {
        std::cout << report.to_json().dump() << "\n";
    } else {
        std::cout << "sweep " << type.to_string() << ": " << report.instances << " instances, "
                  << report.failures.size() << " failures\n";
        for (const SweepFailure& f : report.failures)
            std::cout << "FAIL [" << f.check << "] w=(" << format_word(f.w_word) << ") v=("
                      << format_word(f.v_word) << ") Q=(" << format_word(f.q) << "): " << f.detail
                      << "\n  reproduce: " << f.reproducer(type) << "\n";
    }
    std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";
    if (!report.failures.empty() && common.format == "json")
        std::cerr << "reproduce: " << report.failures.front().reproducer(type) << "\n";
    return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Weyl-group / subword-complex / Schubert-restriction toolkit"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string w_str, v_str, q_str;
    std::string method = "all";
    SweepOptions sweep_options;
    std::string sweep_w, sweep_v, sweep_q;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", common.type, "Cartan type, e.g. A2, B3, G2")->required();
        sub->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* restrict_cmd = app.add_subcommand("restrict", "Restriction S_w|_v of a Schubert K-class");
    add_common(restrict_cmd);
    restrict_cmd->add_option("--w", w_str, "Word for w (\"\" = identity)")->required();
    restrict_cmd->add_option("--v", v_str, "Word for v")->required();
    CLI::Option* q_opt = restrict_cmd->add_option("--word", q_str, "Reduced word Q for v (default: canonical)");
    restrict_cmd->add_option("--method", method, "kk | subword | gw | all")
        ->check(CLI::IsMember({"kk", "subword", "gw", "all"}));

    CLI::App* complex_cmd = app.add_subcommand("complex", "Inspect the subword complex Delta(Q,w)");
    add_common(complex_cmd);
    complex_cmd->add_option("--word", q_str, "Reduced word Q")->required();
    complex_cmd->add_option("--w", w_str, "Word for w")->required();

    CLI::App* chain_cmd = app.add_subcommand("chain", "Verify the degeneration chain for (Q, w)");
    add_common(chain_cmd);
    chain_cmd->add_option("--word", q_str, "Reduced word Q")->required();
    chain_cmd->add_option("--w", w_str, "Word for w")->required();

    CLI::App* billey_cmd = app.add_subcommand("billey", "Cohomology restriction by facet sum");
    add_common(billey_cmd);
    billey_cmd->add_option("--w", w_str, "Word for w")->required();
    billey_cmd->add_option("--v", v_str, "Word for v")->required();
    CLI::Option* bq_opt = billey_cmd->add_option("--word", q_str, "Reduced word Q for v (default: canonical)");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Cross-validate everything over a whole group");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--max-words-per-v", sweep_options.max_words_per_v,
                          "Reduced words per v (0 = all)");
    sweep_cmd->add_option("--jobs", sweep_options.jobs, "Worker threads");
    sweep_cmd->add_option("--group-cap", sweep_options.group_cap, "Refuse groups larger than this");
    sweep_cmd->add_option("--w", sweep_w, "Only instances with this w");
    sweep_cmd->add_option("--v", sweep_v, "Only instances with this v");
    sweep_cmd->add_option("--word", sweep_q, "Only instances with this Q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;  // keep --help at 0
    }

    try {
        if (restrict_cmd->parsed()) return cmd_restrict(common, w_str, v_str, q_str, q_opt->count() > 0, method);
        if (complex_cmd->parsed()) return cmd_complex(common, q_str, w_str);
        if (chain_cmd->parsed()) return cmd_chain(common, q_str, w_str);
        if (billey_cmd->parsed()) return cmd_billey(common, w_str, v_str, q_str, bq_opt->count() > 0);
        if (sweep_cmd->parsed()) {
            if (sweep_cmd->count("--w")) sweep_options.only_w = parse_word(sweep_w);
            if (sweep_cmd->count("--v")) sweep_options.only_v = parse_word(sweep_v);
            if (sweep_cmd->count("--word")) sweep_options.only_q = parse_word(sweep_q);
            return cmd_sweep(common, sweep_options);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
