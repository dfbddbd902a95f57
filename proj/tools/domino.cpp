#include "domtile/io.hpp"
#include "domtile/synthesis.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace dt;

namespace {

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 0;
    bool json() const { return format == "json"; }
};

void emit(const Globals& g, const Json& j, const std::string& text, const std::string& out = {}) {
    std::string s = g.json() ? j.dump(2) + "\n" : text;
    if (out.empty()) std::cout << s;
    else write_text_file(out, s);
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

std::vector<Rule> parse_rules(const std::string& text) {
    std::vector<Rule> rules;
    std::stringstream in(text);
    for (std::string r; std::getline(in, r, ',');)
        if (!r.empty()) rules.push_back(parse_rule(r));
    return rules;
}

std::string blocks_string(const std::vector<BlockType>& bs) {
    std::string s;
    for (auto b : bs) s += to_char(b);
    return s;
}

Json symbol_list(const std::vector<Symbol>& v) {
    Json j = Json::array();
    for (const auto& s : v) j.push_back(format_symbol(s));
    return j;
}

// A catalogue name or a tile-set JSON file.
TileSet load_set(const std::string& arg) {
    for (const auto& n : catalogue_names())
        if (n == arg) return catalogue(n);
    return tileset_from_json(read_json_file(arg));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domino substitution tile sets: synthesis, expansion and verification"};
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "Seed for random choices");
    app.require_subcommand(1);
    app.fallthrough();
    int code = 0;

    auto* census_cmd = app.add_subcommand("census", "Count symbols and equivalence classes");
    census_cmd->callback([&] {
        auto c = census();
        Json j{{"full", c.full}, {"self_paired", c.self_paired}, {"classes", c.classes},
               {"det_symbols", c.det_symbols}, {"det_classes", c.det_classes}};
        std::ostringstream t;
        t << "full symbols      " << c.full << "\nself-paired       " << c.self_paired << "\nclasses           "
          << c.classes << "\ndeterministic     " << c.det_symbols << "\ndet. classes      " << c.det_classes
          << "\n" << j.dump() << "\n";
        emit(g, j, t.str());
    });

    std::string sym, sym2;
    auto* classify_cmd = app.add_subcommand("classify", "Classify a symbol");
    classify_cmd->add_option("symbol", sym)->required();
    classify_cmd->callback([&] {
        auto s = parse_symbol(sym);
        Json j{{"symbol", format_symbol(s)}, {"class", to_string(classify(s))}};
        std::string t = format_symbol(s) + ": " + to_string(classify(s));
        if (is_full(s)) {
            j["partner"] = format_symbol(partner(s));
            j["canonical"] = format_symbol(canonical_rep(s));
            j["prop2"] = to_string(prop2_classify(s));
            t += "\npartner " + format_symbol(partner(s)) + "\ncanonical " + format_symbol(canonical_rep(s)) +
                 "\nprop2 " + to_string(prop2_classify(s));
        }
        emit(g, j, t + "\n");
    });

    auto* atoms_cmd = app.add_subcommand("atoms", "Atomic symbols and deterministic components");
    atoms_cmd->add_option("symbol", sym)->required();
    atoms_cmd->callback([&] {
        auto s = parse_symbol(sym);
        auto a = atoms(s);
        Json j{{"atoms", symbol_list(a)}};
        std::string t = "atoms:";
        for (const auto& x : a) t += " " + format_symbol(x);
        if (is_full(s)) {
            auto d = det_components(s);
            j["det_components"] = symbol_list(d);
            t += "\ncomponents:";
            for (const auto& x : d) t += " " + format_symbol(x);
        }
        emit(g, j, t + "\n");
    });

    auto* equiv_cmd = app.add_subcommand("equiv", "Test two symbols for equivalence");
    equiv_cmd->add_option("a", sym)->required();
    equiv_cmd->add_option("b", sym2)->required();
    int hier_level = 0;
    equiv_cmd->add_option("--hier", hier_level, "Also compare level-n supertiles");
    equiv_cmd->callback([&] {
        auto a = parse_symbol(sym), b = parse_symbol(sym2);
        bool e = equivalent(a, b);
        Json j{{"a", format_symbol(a)}, {"b", format_symbol(b)}, {"equivalent", e}};
        std::string t = std::string(e ? "equivalent" : "not equivalent") + "\n";
        if (hier_level > 0) {
            bool h = hier_equiv_check(a, b, hier_level);
            j["hier_equiv"] = h;
            t += std::string("level-") + std::to_string(hier_level) + " supertiles " + (h ? "coincide" : "differ") + "\n";
        }
        emit(g, j, t);
        code = e ? 0 : 1;
    });

    std::string out;
    auto* synth_cmd = app.add_subcommand("synth", "Synthesize the tile set of a symbol");
    synth_cmd->add_option("symbol", sym)->required();
    synth_cmd->add_option("--out", out);
    synth_cmd->callback([&] {
        auto t = synthesize(parse_symbol(sym));
        if (!out.empty()) write_text_file(out, tileset_to_json(t).dump(2) + "\n");
        emit(g, tileset_to_json(t), t.name + " (" + std::to_string(t.size()) + " tiles)\n" + join(t.names()) + "\n");
    });

    int level = 0;
    std::string choices_file;
    bool all = false;
    auto* expand_cmd = app.add_subcommand("expand", "Expand a symbol to a level-n supertile");
    expand_cmd->add_option("symbol", sym)->required();
    expand_cmd->add_option("--level", level)->required();
    auto* choices_opt = expand_cmd->add_option("--choices", choices_file, "JSON array of codes, depth first");
    auto* all_opt = expand_cmd->add_flag("--all", all, "One expansion per deterministic component");
    choices_opt->excludes(all_opt);
    expand_cmd->add_option("--out", out);
    expand_cmd->callback([&] {
        auto s = parse_symbol(sym);
        if (all) {
            Json arr = Json::array();
            std::string t;
            for (const auto& c : det_components(s)) {
                auto p = expand(c, level);
                arr.push_back(Json{{"symbol", format_symbol(c)}, {"patch", domino_patch_to_json(p)}});
                t += format_symbol(c) + "\n" + render_ascii(p) + "\n";
            }
            emit(g, arr, t, out);
            return;
        }
        Chooser ch = seeded_chooser(g.seed);
        if (!choices_file.empty()) ch = sequence_chooser(read_json_file(choices_file).get<std::vector<Code>>());
        auto p = expand(s, level, ch);
        if (!out.empty()) write_text_file(out, domino_patch_to_json(p).dump(2) + "\n");
        else emit(g, domino_patch_to_json(p), render_ascii(p));
    });

    std::string patch_file;
    auto* deflate_cmd = app.add_subcommand("deflate", "Deflate a domino patch");
    deflate_cmd->add_option("symbol", sym)->required();
    deflate_cmd->add_option("--patch", patch_file)->required();
    deflate_cmd->add_option("--out", out);
    deflate_cmd->callback([&] {
        auto p = domino_patch_from_json(read_json_file(patch_file));
        auto d = deflate(p, parse_symbol(sym));
        if (!d) {
            emit(g, Json{{"result", "NO_DECOMPOSITION"}}, "NO_DECOMPOSITION\n");
            code = 1;
            return;
        }
        if (!out.empty()) write_text_file(out, domino_patch_to_json(*d).dump(2) + "\n");
        else emit(g, domino_patch_to_json(*d), render_ascii(*d));
    });

    std::string rules_text;
    auto* closure_cmd = app.add_subcommand("closure", "Block-calculus closure of T1 rules");
    closure_cmd->add_option("--rules", rules_text, "Comma separated: pi,par,xi,pibar")->required();
    closure_cmd->callback([&] {
        auto r = closure(parse_rules(rules_text));
        Json states = Json::array();
        for (const auto& st : r.states) states.push_back(format_state(st));
        Json j = tileset_to_json(r.tiles);
        j["states"] = states;
        emit(g, j, std::to_string(r.tiles.size()) + " tiles\n" + join(r.tiles.names()) + "\n");
    });

    auto* derive_cmd = app.add_subcommand("derive-atomics", "Derive the atomic and pair tables");
    derive_cmd->add_option("--out", out);
    derive_cmd->callback([&] {
        const auto& t = derive_atomics();
        auto mism = oracle_mismatches();
        Json j = atomic_tables_to_json(t);
        if (!out.empty()) write_text_file(out, j.dump(2) + "\n");
        Json summary{{"atomic", t.atomic.size()}, {"pairs", t.pairs.size()}, {"mismatches", mism}};
        std::string text = std::to_string(t.atomic.size()) + " atomic sets, " + std::to_string(t.pairs.size()) +
                           " pair sets, " + std::to_string(mism.size()) + " mismatches with the fixtures\n";
        for (const auto& m : mism) text += m + "\n";
        emit(g, out.empty() ? j : summary, text);
        code = mism.empty() ? 0 : 1;
    });

    std::string row;
    auto* thm_cmd = app.add_subcommand("theorem1", "The nine enforcing subsets of T1");
    thm_cmd->add_option("--row", row);
    thm_cmd->callback([&] {
        Json arr = Json::array();
        std::string t;
        bool found = row.empty();
        for (const auto& r : theorem1_sets()) {
            if (!row.empty() && r.name != row) continue;
            found = true;
            std::vector<std::string> rs;
            for (auto x : r.rules) rs.push_back(to_string(x));
            auto adm = blocks_string(block_admissibility(r.tiles));
            Json j{{"name", r.name}, {"size", r.tiles.size()}, {"rules", rs}, {"admits", adm}, {"expected", r.admits}};
            if (!row.empty()) j["tiles"] = r.tiles.names();
            arr.push_back(j);
            t += r.name + "  " + std::to_string(r.tiles.size()) + " tiles  enforces " + join(rs, ",") + "  admits " +
                 adm + "\n";
        }
        if (!found) throw CLI::ValidationError("--row", "unknown row " + row);
        emit(g, arr, t);
    });

    auto* usage_cmd = app.add_subcommand("usage-check", "Synthesized tiles unused by marked supertiles");
    usage_cmd->add_option("symbol", sym)->required();
    usage_cmd->add_option("--level", level)->required();
    usage_cmd->callback([&] {
        auto u = usage_check(parse_symbol(sym), level);
        emit(g, Json{{"unused", u.names()}}, u.empty() ? "all tiles used\n" : join(u.names()) + "\n");
        code = u.empty() ? 0 : 1;
    });

    std::string context;
    auto* st_cmd = app.add_subcommand("supertile", "Build a marked supertile");
    st_cmd->add_option("context", context, "Deterministic symbol or comma separated rules")->required();
    st_cmd->add_option("--level", level)->required();
    st_cmd->add_option("--out", out);
    st_cmd->callback([&] {
        bool is_rule = context.find_first_of("abcdefghijklmnopqrstuvwxyz") != std::string::npos;
        auto ctx = is_rule ? SupertileContext::of(parse_rules(context)) : SupertileContext::of(parse_symbol(context));
        auto st = build_marked_supertile(ctx, level);
        auto v = verify_patch(st.tiles, st.patch);
        Json j = marked_patch_to_json(st.patch);
        j["level"] = level;
        j["context"] = ctx.label();
        j["blocks"] = blocks_string(st.blocks);
        j["violations"] = v.size();
        if (!out.empty()) write_text_file(out, j.dump(2) + "\n");
        else emit(g, j, render_ascii(st.patch) + "violations " + std::to_string(v.size()) + "\n");
        code = v.empty() ? 0 : 1;
    });

    std::string set_file;
    int width = 0, height = 0;
    bool torus = false, count = false, all_tilings = false;
    std::uint64_t budget = kDefaultBudget;
    auto* solve_cmd = app.add_subcommand("solve", "Tile a region with a tile set");
    solve_cmd->add_option("--set", set_file)->required();
    solve_cmd->add_option("--width", width)->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--height", height)->required()->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--torus", torus);
    auto* count_opt = solve_cmd->add_flag("--count", count);
    solve_cmd->add_flag("--all", all_tilings)->excludes(count_opt);
    solve_cmd->add_option("--budget", budget);
    solve_cmd->add_option("--out", out);
    solve_cmd->callback([&] {
        auto t = load_set(set_file);
        if (torus && !count && !all_tilings) {
            auto r = torus_search(t, width, height, budget);
            Json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
            if (r.witness) j["witness"] = marked_patch_to_json(*r.witness);
            emit(g, j, to_string(r.status) + "\n" + (r.witness ? render_ascii(*r.witness) : ""), out);
            code = r.status == TorusStatus::Witness ? 0 : r.status == TorusStatus::Timeout ? 2 : 1;
            return;
        }
        Region r;
        r.width = width;
        r.height = height;
        r.boundary = torus ? Boundary::Torus : Boundary::Free;
        Mode mode = count ? Mode::Count : all_tilings ? Mode::All : Mode::First;
        auto res = solve(t, r, mode, budget);
        Json j{{"status", to_string(res.status)}, {"count", res.count}, {"nodes", res.nodes}};
        Json ws = Json::array();
        std::string text = to_string(res.status) + (count ? " " + std::to_string(res.count) : "") + "\n";
        for (const auto& w : res.witnesses) {
            ws.push_back(marked_patch_to_json(w));
            text += render_ascii(w) + "\n";
        }
        if (!count) j["witnesses"] = ws;
        emit(g, j, text, out);
        code = res.status == Status::Sat ? 0 : res.status == Status::Unsat ? 1 : 2;
    });

    bool ascii = false, show_codes = false, no_marks = false;
    int scale = 16;
    auto* render_cmd = app.add_subcommand("render", "Render a patch file as SVG or ASCII");
    render_cmd->add_option("--patch", patch_file)->required();
    render_cmd->add_flag("--ascii", ascii);
    render_cmd->add_flag("--codes", show_codes);
    render_cmd->add_flag("--no-marks", no_marks);
    render_cmd->add_option("--scale", scale)->check(CLI::PositiveNumber);
    render_cmd->add_option("--out", out);
    render_cmd->callback([&] {
        auto j = read_json_file(patch_file);
        RenderSpec spec;
        spec.scale = scale;
        spec.show_codes = show_codes;
        spec.show_marks = !no_marks;
        std::string s;
        if (j.contains("dominoes")) {
            auto p = domino_patch_from_json(j);
            s = ascii ? render_ascii(p) : render_domino_svg(p, spec);
        } else {
            auto p = marked_patch_from_json(j);
            s = ascii ? render_ascii(p) : render_marked_svg(p, spec);
        }
        if (out.empty()) std::cout << s;
        else write_text_file(out, s);
    });

    auto* adm_cmd = app.add_subcommand("admissible", "Blocks admitted by a T1 tile set");
    adm_cmd->add_option("--set", set_file)->required();
    adm_cmd->callback([&] {
        auto t = load_set(set_file);
        auto b = blocks_string(block_admissibility(t));
        emit(g, Json{{"admits", b}}, (b.empty() ? "none" : b) + "\n");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return code;
}
