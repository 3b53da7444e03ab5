#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bimagic/generator.hpp"
#include "bimagic/grid_io.hpp"
#include "bimagic/render.hpp"
#include "bimagic/segment_algebra.hpp"
#include "bimagic/verifier.hpp"

namespace py = pybind11;
using namespace bimagic;

namespace {

py::dict report_dict(const VerificationReport& report, const Square& sq) {
    py::dict d;
    d["order"] = sq.order;
    d["width"] = sq.width;
    d["digits"] = sq.alphabet;
    d["s1"] = report.s1 ? py::cast(*report.s1) : py::none();
    d["s2"] = report.s2 ? py::cast(*report.s2) : py::none();
    d["block_sum"] =
        report.block_sum ? py::cast(*report.block_sum) : py::none();
    d["pandiagonal"] = report.pandiagonal;
    d["pandiagonal_bimagic"] = report.pandiagonal_bimagic;
    d["universal"] = report.universal;
    py::dict per_family;
    for (const auto& [kind, pass] : report.per_family_pass) {
        per_family[line_kind_name(kind)] = pass;
    }
    d["per_family_pass"] = per_family;
    py::list failures;
    for (const Failure& f : report.failures) {
        py::dict entry;
        entry["family"] = line_kind_name(f.family);
        entry["index"] = f.index;
        entry["observed"] = f.observed;
        entry["power"] = f.power;
        failures.append(entry);
    }
    d["failures"] = failures;
    return d;
}

} // namespace

PYBIND11_MODULE(bimagic, m) {
    m.doc() = "universal bimagic squares: construction, verification, "
              "transforms, rendering";

    py::register_exception<SearchExhausted>(m, "SearchExhaustedError");
    py::register_exception<UnsupportedOrder>(m, "UnsupportedOrderError");
    py::register_exception<ParseError>(m, "GridParseError");
    py::register_exception<CapacityMismatch>(m, "CapacityMismatchError");

    m.def(
        "expected_sums",
        [](int order, const std::vector<int>& digits, int width) {
            return py::make_tuple(expected_s1(order, digits, width),
                                  expected_s2(order, digits, width));
        },
        py::arg("order"), py::arg("digits"), py::arg("width"),
        "Closed-form (S1, S2) for a configuration.");

    m.def(
        "generate",
        [](int order, const std::vector<int>& digits, std::uint64_t seed,
           const std::string& profile, int workers, double budget) {
            SearchSpec spec;
            spec.order = order;
            spec.digits = digits;
            spec.profile = profile == "pandiagonal" ? Profile::pandiagonal
                                                    : Profile::standard;
            spec.seed = seed;
            spec.worker_count = workers;
            spec.time_budget_seconds = budget;
            return serialize_grid(search_generate(spec));
        },
        py::arg("order"), py::arg("digits"), py::arg("seed") = 0,
        py::arg("profile") = "standard", py::arg("workers") = 1,
        py::arg("budget") = 60.0,
        "Search for a universal bimagic square; returns the grid file text.");

    m.def(
        "verify",
        [](const std::string& grid_text, bool blocks, bool pandiagonal) {
            const Square sq = parse_grid(grid_text);
            return report_dict(verify(sq, blocks, pandiagonal), sq);
        },
        py::arg("grid_text"), py::arg("blocks") = false,
        py::arg("pandiagonal") = false,
        "Verify a grid file text; returns the report as a dict.");

    m.def(
        "transform",
        [](const std::string& grid_text, const std::string& op) {
            const Square sq = parse_grid(grid_text);
            if (op == "rotate180") return serialize_grid(apply_rotate180(sq));
            if (op == "mirror") return serialize_grid(apply_mirror(sq));
            throw py::value_error("op must be rotate180 or mirror");
        },
        py::arg("grid_text"), py::arg("op"),
        "Rotate or mirror a grid file text.");

    m.def(
        "render",
        [](const std::string& grid_text, const std::string& style) {
            const Square sq = parse_grid(grid_text);
            return render_square(sq, style == "plain" ? RenderStyle::plain
                                                      : RenderStyle::sevenseg);
        },
        py::arg("grid_text"), py::arg("style") = "sevenseg",
        "ASCII rendering of a grid file text.");

    m.def(
        "distinct_cover",
        [](const std::string& grid_text) {
            return distinct_cover(parse_grid(grid_text));
        },
        py::arg("grid_text"),
        "True iff the grid uses every width-k word over its alphabet once.");

    m.def("rotate_numeral", &rotate_numeral, py::arg("numeral"));
    m.def("mirror_numeral", &mirror_numeral, py::arg("numeral"));

    m.def(
        "classify_string",
        [](const std::string& s) {
            switch (classify_string(s)) {
                case StringClass::universal: return "universal";
                case StringClass::rotation_only: return "rotation_only";
                default: return "neither";
            }
        },
        py::arg("numeral"),
        "universal | rotation_only | neither.");

    m.def(
        "classify_digit_set",
        [](const std::vector<int>& digits) {
            const DigitSetProfile p = classify_digit_set(digits);
            py::dict d;
            d["digits"] = p.digits;
            d["universal_capable"] = p.universal_capable;
            d["upside_down_capable"] = p.upside_down_capable;
            return d;
        },
        py::arg("digits"));
}
