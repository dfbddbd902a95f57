#include "domtile/io.hpp"
#include "domtile/substitution.hpp"
#include "domtile/synthesis.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dt;

namespace {

std::string blocks_string(const std::vector<BlockType>& bs) {
    std::string s;
    for (auto b : bs) s += to_char(b);
    return s;
}

std::vector<Rule> rules_of(const std::vector<std::string>& names) {
    std::vector<Rule> rs;
    for (const auto& n : names) rs.push_back(parse_rule(n));
    return rs;
}

} // namespace

PYBIND11_MODULE(_domtile, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<LayoutError>(m, "LayoutError", PyExc_ValueError);

    py::class_<Symbol>(m, "Symbol")
        .def(py::init([](const std::string& s) { return parse_symbol(s); }))
        .def("__str__", &format_symbol)
        .def("__repr__", [](const Symbol& s) { return "Symbol('" + format_symbol(s) + "')"; })
        .def("__eq__", [](const Symbol& a, const Symbol& b) { return a == b; })
        .def("__hash__", [](const Symbol& s) { return py::hash(py::str(format_symbol(s))); })
        .def("shift", [](const Symbol& s, int k) { return symbol_shift(s, Code(k & 3)); })
        .def("partner", &partner)
        .def("classify", [](const Symbol& s) { return to_string(classify(s)); })
        .def("is_deterministic", &is_deterministic)
        .def("det_components", &det_components)
        .def("prop2_class", [](const Symbol& s) { return to_string(prop2_classify(s)); });

    m.def("equivalent", &equivalent);
    m.def("canonical_rep", &canonical_rep);
    m.def("deterministic_symbols", &deterministic_symbols);
    m.def("census", [] {
        auto c = census();
        py::dict d;
        d["full"] = c.full;
        d["self_paired"] = c.self_paired;
        d["classes"] = c.classes;
        d["det_symbols"] = c.det_symbols;
        d["det_classes"] = c.det_classes;
        return d;
    });

    py::class_<TileSet>(m, "TileSet")
        .def_readonly("name", &TileSet::name)
        .def("__len__", &TileSet::size)
        .def("__contains__", [](const TileSet& t, const std::string& n) { return t.contains(n); })
        .def("__eq__", [](const TileSet& a, const TileSet& b) { return a == b; })
        .def("names", &TileSet::names)
        .def("union", [](const TileSet& a, const TileSet& b) { return a.united(b); })
        .def("minus", [](const TileSet& a, const TileSet& b) { return a.minus(b); })
        .def("issubset", &TileSet::subset_of)
        .def("admissible_blocks", [](const TileSet& t) { return blocks_string(block_admissibility(t)); })
        .def("to_json", [](const TileSet& t) { return tileset_to_json(t).dump(); });

    m.def("tileset_from_json", [](const std::string& s) { return tileset_from_json(Json::parse(s)); });
    m.def("catalogue", [](const std::string& n) { return catalogue(n); });
    m.def("catalogue_names", &catalogue_names);
    m.def("closure", [](const std::vector<std::string>& rules) { return closure(rules_of(rules)).tiles; });
    m.def("synthesize", &synthesize);
    m.def("oracle_mismatches", &oracle_mismatches);

    py::class_<DominoPatch>(m, "DominoPatch")
        .def_readonly("level", &DominoPatch::level)
        .def("__len__", [](const DominoPatch& p) { return p.dominoes.size(); })
        .def("__eq__", [](const DominoPatch& a, const DominoPatch& b) { return a == b; })
        .def("to_json", [](const DominoPatch& p) { return domino_patch_to_json(p).dump(); })
        .def("ascii", [](const DominoPatch& p) { return render_ascii(p); })
        .def("svg", [](const DominoPatch& p) { return render_domino_svg(p); });

    m.def("domino_patch_from_json", [](const std::string& s) { return domino_patch_from_json(Json::parse(s)); });
    m.def("parse_ascii", &parse_ascii);
    m.def(
        "expand", [](const Symbol& s, int n, std::uint64_t seed) { return expand(s, n, seeded_chooser(seed)); },
        py::arg("symbol"), py::arg("level"), py::arg("seed") = 0);
    m.def("deflate", &deflate);
    m.def("flip_v_relabel", &flip_v_relabel);
    m.def(
        "congruent",
        [](const DominoPatch& a, const DominoPatch& b, bool point_group, bool relabel) {
            return congruent(a, b, {true, point_group, relabel, false});
        },
        py::arg("a"), py::arg("b"), py::arg("point_group") = false, py::arg("relabel") = false);
    m.def("hier_equiv_check", &hier_equiv_check);
    m.def("periodicity_scan", [](const DominoPatch& p) { return periodicity_scan(p); });

    m.def(
        "count_tilings",
        [](const TileSet& t, int w, int h, std::uint64_t budget) { return count_tilings(t, w, h, budget); },
        py::arg("tiles"), py::arg("width"), py::arg("height"), py::arg("budget") = kDefaultBudget);
    m.def(
        "torus_search",
        [](const TileSet& t, int p, int q, std::uint64_t budget) {
            auto r = torus_search(t, p, q, budget);
            py::dict d;
            d["status"] = to_string(r.status);
            d["nodes"] = r.nodes;
            d["witness"] = r.witness ? py::object(py::str(marked_patch_to_json(*r.witness).dump())) : py::none();
            return d;
        },
        py::arg("tiles"), py::arg("p"), py::arg("q"), py::arg("budget") = kDefaultBudget);

    m.def("max_supertile_level", &max_supertile_level);
    m.def("marked_supertile", [](const py::object& context, int level) {
        auto ctx = py::isinstance<py::str>(context)
                       ? SupertileContext::of(parse_symbol(context.cast<std::string>()))
                       : SupertileContext::of(rules_of(context.cast<std::vector<std::string>>()));
        auto st = build_marked_supertile(ctx, level);
        py::dict d;
        d["level"] = st.level;
        d["tiles"] = st.tiles;
        d["patch"] = marked_patch_to_json(st.patch).dump();
        d["violations"] = verify_patch(st.tiles, st.patch).size();
        d["blocks"] = blocks_string(st.blocks);
        d["ascii"] = render_ascii(st.patch);
        d["svg"] = render_marked_svg(st.patch);
        return d;
    });
}
