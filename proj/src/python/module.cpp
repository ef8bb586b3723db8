// Python bindings for the main operations. Elements travel as words
// (lists of 1-based simple indices), polynomials and reports as the same
// JSON-shaped dicts the CLI emits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "schubkit/degeneration.hpp"
#include "schubkit/restriction.hpp"
#include "schubkit/subword.hpp"
#include "schubkit/sweep.hpp"
#include "schubkit/weyl.hpp"

namespace py = pybind11;
using namespace schubkit;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

WeylGroup make_group(const std::string& type) { return WeylGroup(CartanType::parse(type)); }

Word word_for_v(const WeylGroup& group, const WeylElement& v, const std::optional<Word>& q) {
    if (!q) return group.canonical_reduced_word(v);
    if (!group.is_reduced(*q) || group.from_word(*q) != v)
        throw std::invalid_argument("Q must be a reduced word for v");
    return *q;
}

}  // namespace

PYBIND11_MODULE(schubkit, m) {
    m.doc() = "Exact Weyl-group, subword-complex and Schubert-restriction toolkit";

    m.def(
        "cartan_matrix",
        [](const std::string& type) {
            return cartan_matrix(CartanType::parse(type));
        },
        py::arg("type"));

    m.def(
        "positive_roots",
        [](const std::string& type) {
            std::vector<std::vector<int>> out;
            for (const RootVector& r : positive_roots(CartanType::parse(type))) out.push_back(r.coords);
            return out;
        },
        py::arg("type"));

    m.def(
        "reflect_simple",
        [](const std::string& type, int i, const std::vector<int>& coords) {
            return reflect_simple(CartanType::parse(type), i, RootVector{coords}).coords;
        },
        py::arg("type"), py::arg("i"), py::arg("vector"));

    m.def(
        "weyl_order",
        [](const std::string& type, std::size_t cap) { return make_group(type).all_elements(cap).size(); },
        py::arg("type"), py::arg("cap") = WeylGroup::kDefaultGroupCap);

    m.def(
        "length",
        [](const std::string& type, const Word& word) {
            const WeylGroup g = make_group(type);
            return g.length(g.from_word(word));
        },
        py::arg("type"), py::arg("word"));

    m.def(
        "is_reduced",
        [](const std::string& type, const Word& word) { return make_group(type).is_reduced(word); },
        py::arg("type"), py::arg("word"));

    m.def(
        "bruhat_leq",
        [](const std::string& type, const Word& w, const Word& v) {
            const WeylGroup g = make_group(type);
            return g.bruhat_leq(g.from_word(w), g.from_word(v));
        },
        py::arg("type"), py::arg("w"), py::arg("v"));

    m.def(
        "demazure_product",
        [](const std::string& type, const Word& word) {
            const WeylGroup g = make_group(type);
            return g.canonical_reduced_word(g.demazure_product(word));
        },
        py::arg("type"), py::arg("word"),
        "Canonical reduced word of the Demazure product of an arbitrary word");

    m.def(
        "canonical_reduced_word",
        [](const std::string& type, const Word& word) {
            const WeylGroup g = make_group(type);
            return g.canonical_reduced_word(g.from_word(word));
        },
        py::arg("type"), py::arg("word"));

    m.def(
        "all_reduced_words",
        [](const std::string& type, const Word& word, std::size_t cap) {
            const WeylGroup g = make_group(type);
            return g.all_reduced_words(g.from_word(word),
                                       cap == 0 ? std::nullopt : std::optional<std::size_t>(cap));
        },
        py::arg("type"), py::arg("word"), py::arg("cap") = 0);

    m.def(
        "descents",
        [](const std::string& type, const Word& word) {
            const WeylGroup g = make_group(type);
            auto d = g.descents(g.from_word(word));
            return std::vector<int>(d.begin(), d.end());
        },
        py::arg("type"), py::arg("word"));

    m.def(
        "beta_sequence",
        [](const std::string& type, const Word& word) {
            std::vector<std::vector<int>> out;
            for (const RootVector& b : make_group(type).beta_sequence(word)) out.push_back(b.coords);
            return out;
        },
        py::arg("type"), py::arg("word"));

    m.def(
        "subword_complex",
        [](const std::string& type, const Word& q, const Word& w) {
            const WeylGroup g = make_group(type);
            SubwordComplex delta(g, q, g.from_word(w));
            nlohmann::json j = delta.to_json();
            j["void"] = delta.is_void();
            j["euler"] = delta.euler_characteristic();
            j["k_polynomial"] = delta.k_polynomial().to_json();
            return json_to_py(j);
        },
        py::arg("type"), py::arg("Q"), py::arg("w"));

    m.def(
        "vertex_decomposition",
        [](const std::string& type, const Word& q, const Word& w) {
            const WeylGroup g = make_group(type);
            const VertexDecompositionReport report = verify_vertex_decomposition(g, q, g.from_word(w));
            py::dict out;
            out["case"] = report.case_label;
            out["ok"] = report.ok;
            out["problems"] = report.problems;
            return out;
        },
        py::arg("type"), py::arg("Q"), py::arg("w"),
        "Case of the decomposition at the last letter of Q, with its checks");

    m.def(
        "restrict",
        [](const std::string& type, const Word& w_word, const Word& v_word, std::optional<Word> q,
           const std::string& method) {
            const WeylGroup g = make_group(type);
            const WeylElement w = g.from_word(w_word), v = g.from_word(v_word);
            const Word word = word_for_v(g, v, q);
            LaurentPolynomial value(g.rank());
            if (method == "kk") {
                value = restrict_kk(g, w, v);
            } else if (method == "subword") {
                value = restrict_subword(g, w, v, word);
            } else if (method == "gw") {
                value = restrict_graham_willems(g, w, v, word);
            } else if (method == "all") {
                value = restrict_kk(g, w, v);
                if (restrict_subword(g, w, v, word) != value || restrict_graham_willems(g, w, v, word) != value)
                    throw std::runtime_error("restriction methods disagree");
            } else {
                throw std::invalid_argument("method must be kk, subword, gw or all");
            }
            return json_to_py(value.to_json());
        },
        py::arg("type"), py::arg("w"), py::arg("v"), py::arg("Q") = std::nullopt,
        py::arg("method") = "all");

    m.def(
        "billey",
        [](const std::string& type, const Word& w_word, const Word& v_word, std::optional<Word> q) {
            const WeylGroup g = make_group(type);
            const WeylElement w = g.from_word(w_word), v = g.from_word(v_word);
            const Word word = word_for_v(g, v, q);
            const CohomologyPolynomial value = billey_restriction(g, w, v, word);
            if (value != restrict_cohomology_recursion(g, w, v))
                throw std::runtime_error("cohomology methods disagree");
            return json_to_py(value.to_json());
        },
        py::arg("type"), py::arg("w"), py::arg("v"), py::arg("Q") = std::nullopt);

    m.def(
        "boundary_class",
        [](const std::string& type, const Word& w_word, const Word& v_word, std::optional<Word> q) {
            const WeylGroup g = make_group(type);
            const WeylElement w = g.from_word(w_word), v = g.from_word(v_word);
            return json_to_py(boundary_ideal_class(g, w, v, word_for_v(g, v, q)).to_json());
        },
        py::arg("type"), py::arg("w"), py::arg("v"), py::arg("Q") = std::nullopt);

    m.def(
        "cell_weights",
        [](const std::string& type, const Word& v_word) {
            const WeylGroup g = make_group(type);
            const CellWeights cw = cell_weights(g, g.from_word(v_word));
            py::dict out;
            std::vector<std::vector<int>> cell, conversion;
            for (const RootVector& r : cw.cell) cell.push_back(r.coords);
            for (const RootVector& r : cw.conversion) conversion.push_back(r.coords);
            out["cell"] = cell;
            out["conversion"] = conversion;
            return out;
        },
        py::arg("type"), py::arg("v"));

    m.def(
        "verify_chain",
        [](const std::string& type, const Word& q, const Word& w_word) {
            const WeylGroup g = make_group(type);
            return json_to_py(chain_to_json(g, q, g.from_word(w_word)));
        },
        py::arg("type"), py::arg("Q"), py::arg("w"));

    m.def(
        "sweep",
        [](const std::string& type, std::size_t max_words_per_v, int jobs, std::size_t group_cap) {
            SweepOptions options;
            options.max_words_per_v = max_words_per_v;
            options.jobs = jobs;
            options.group_cap = group_cap;
            return json_to_py(run_sweep(make_group(type), options).to_json());
        },
        py::arg("type"), py::arg("max_words_per_v") = 5, py::arg("jobs") = 1,
        py::arg("group_cap") = WeylGroup::kDefaultGroupCap);
}
