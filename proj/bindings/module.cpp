#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagpath/counting.hpp"
#include "flagpath/diagram3.hpp"
#include "flagpath/flag.hpp"
#include "flagpath/lattice.hpp"
#include "flagpath/matroid.hpp"

namespace py = pybind11;
using namespace flagpath;

namespace {

py::int_ to_pyint(const BigCount& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BinSpec make_spec(const std::vector<int>& l, int n) { return BinSpec(l, n); }

std::vector<std::vector<std::optional<int>>> entries_or_none(
    const DiagramMatrix& d) {
    std::vector<std::vector<std::optional<int>>> out;
    for (const auto& row : d.entries) {
        out.emplace_back();
        for (int v : row)
            out.back().push_back(v == kStar ? std::nullopt
                                            : std::optional<int>(v));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(flagpath, m) {
    m.doc() = "Tennis-ball flag matroids: lattice paths, counting, diagrams";

    py::register_exception<Error>(m, "FlagpathError");

    m.def(
        "count_configurations",
        [](const std::vector<int>& l, int n) {
            return to_pyint(count_configurations(make_spec(l, n)));
        },
        py::arg("l"), py::arg("n"));
    m.def(
        "tbp_count",
        [](int a, int b, int n) { return to_pyint(tbp_count(a, b, n)); },
        py::arg("a"), py::arg("b"), py::arg("n"));
    m.def(
        "count_by_filter",
        [](const std::vector<int>& l, int n, int limit) {
            return to_pyint(count_by_filter(make_spec(l, n), limit));
        },
        py::arg("l"), py::arg("n"), py::arg("limit") = 12);
    m.def(
        "bounds",
        [](const std::vector<int>& l, int n, bool with_exact) {
            const BoundsReport r = bounds(make_spec(l, n), with_exact);
            py::dict out;
            out["upper"] = to_pyint(r.upper_multinomial);
            out["lower_hook"] =
                r.lower_hook ? py::object(to_pyint(*r.lower_hook)) : py::none();
            out["lower_product"] = to_pyint(r.lower_product);
            if (r.exact) out["exact"] = to_pyint(*r.exact);
            return out;
        },
        py::arg("l"), py::arg("n"), py::arg("with_exact") = false);
    m.def(
        "diagram",
        [](int l1, int l2, int l3, int n) {
            return entries_or_none(diagram_matrix({l1, l2, l3}, n));
        },
        py::arg("l1"), py::arg("l2"), py::arg("l3"), py::arg("n"));
    m.def(
        "is_configuration_path",
        [](const std::vector<int>& steps, const std::vector<int>& l, int n) {
            return is_configuration_path(
                StepSequence(static_cast<int>(l.size()), steps), make_spec(l, n));
        },
        py::arg("steps"), py::arg("l"), py::arg("n"));
    m.def(
        "reachable_configurations",
        [](const std::vector<int>& l, int n, int limit) {
            return reachable_configurations(make_spec(l, n), limit).flags;
        },
        py::arg("l"), py::arg("n"), py::arg("limit") = kDefaultProcessLimit);
    m.def(
        "simulate",
        [](const std::vector<int>& l, int n,
           const std::vector<std::vector<std::vector<int>>>& turns) {
            MoveSchedule schedule;
            schedule.turns = turns;
            return simulate(make_spec(l, n), schedule);
        },
        py::arg("l"), py::arg("n"), py::arg("turns"));
    m.def(
        "realize",
        [](const std::vector<int>& l, int n, const OrderedPartition& target) {
            return realize(make_spec(l, n), target).turns;
        },
        py::arg("l"), py::arg("n"), py::arg("target"));
    m.def(
        "is_flag_matroid",
        [](int ground_size, const std::vector<int>& flag_rank,
           std::vector<OrderedPartition> flags, int limit) {
            FlagBasisFamily family;
            family.ground_size = ground_size;
            family.flag_rank = flag_rank;
            for (auto& f : flags)
                family.flags.push_back(normalized_partition(std::move(f)));
            std::sort(family.flags.begin(), family.flags.end());
            const FlagVerdict v = is_flag_matroid(family, limit);
            py::dict out;
            out["ok"] = v.ok;
            if (!v.ok) {
                out["axiom"] = v.axiom;
                out["index"] = v.index;
                out["detail"] = v.detail;
            }
            return out;
        },
        py::arg("ground_size"), py::arg("flag_rank"), py::arg("flags"),
        py::arg("limit") = kDefaultBruteForceLimit);
    m.def(
        "nested_bases",
        [](const std::string& path, int limit) {
            const NestedMatroid m2 = nested_from_path(path_from_text(path, 2));
            std::vector<std::vector<int>> out;
            for (std::uint64_t b : m2.basis_masks(limit))
                out.push_back(set_from_mask(b));
            return out;
        },
        py::arg("path"), py::arg("limit") = kDefaultBruteForceLimit);
}
