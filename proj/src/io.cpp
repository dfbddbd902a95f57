#include "domtile/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dt {

namespace {

constexpr const char* kSides = "NESW";

std::string context_name(Context c) { return c == Context::T1 ? "T1" : "T2"; }

Context parse_context(const Json& j) {
    if (!j.contains("context")) return Context::T2;
    auto s = j.at("context").get<std::string>();
    if (s == "T1") return Context::T1;
    if (s == "T2") return Context::T2;
    throw FormatError("unknown context " + s);
}

template <class F>
auto guarded(const std::string& what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw FormatError(what + ": " + e.what());
    }
}

// Pose taking the named reference tile onto the placed edges.
std::optional<Pose> pose_from_reference(const Tile& ref, const Edges& e) {
    for (Pose g = 0; g < kPoses; ++g)
        if (apply_pose(ref.edges, g) == e) return g;
    return std::nullopt;
}

std::string num(double v) {
    std::ostringstream o;
    o << v;
    return o.str();
}

} // namespace

Json tileset_to_json(const TileSet& t) {
    Json j;
    j["name"] = t.name;
    j["context"] = context_name(t.context());
    Json arr = Json::array();
    for (const auto& tile : t.tiles()) {
        Json e;
        for (int s = 0; s < 4; ++s) e[std::string(1, kSides[s])] = format_mark(tile.edges[s]);
        Json item;
        item["name"] = tile.name;
        item["cornered"] = tile.cornered;
        item["edges"] = e;
        arr.push_back(item);
    }
    j["tiles"] = arr;
    return j;
}

TileSet tileset_from_json(const Json& j) {
    return guarded("tile set", [&] {
        Context ctx = parse_context(j);
        std::string name = j.value("name", std::string{});
        if (j.contains("names")) return tileset_from_names(name, j.at("names").get<std::vector<std::string>>(), ctx);
        if (!j.contains("tiles")) throw FormatError("tile set needs \"tiles\" or \"names\"");
        std::vector<Tile> ts;
        for (const auto& item : j.at("tiles")) {
            Edges e;
            for (int s = 0; s < 4; ++s) e[s] = parse_mark(item.at("edges").at(std::string(1, kSides[s])).get<std::string>(), ctx);
            ts.push_back(tile_from_edges(item.at("cornered").get<bool>(), e));
        }
        return TileSet(name, ts);
    });
}

Json domino_patch_to_json(const DominoPatch& p) {
    Json j;
    j["level"] = p.level;
    Json arr = Json::array();
    for (const auto& d : p.dominoes)
        arr.push_back({{"x", d.x}, {"y", d.y}, {"axis", d.axis == Axis::H ? "H" : "V"}, {"code", int(d.code)}});
    j["dominoes"] = arr;
    return j;
}

DominoPatch domino_patch_from_json(const Json& j) {
    return guarded("domino patch", [&] {
        DominoPatch p;
        p.level = j.value("level", 0);
        for (const auto& d : j.at("dominoes")) {
            PlacedDomino pd;
            pd.x = d.at("x");
            pd.y = d.at("y");
            auto axis = d.at("axis").get<std::string>();
            if (axis != "H" && axis != "V") throw FormatError("axis must be H or V");
            pd.axis = axis == "H" ? Axis::H : Axis::V;
            int c = d.at("code");
            if (c < 0 || c > 3) throw FormatError("code out of range");
            pd.code = Code(c);
            p.dominoes.push_back(pd);
        }
        p.normalize();
        return p;
    });
}

Json marked_patch_to_json(const MarkedPatch& p) {
    Json arr = Json::array();
    for (const auto& [c, pt] : p.cells) {
        Json item{{"x", c.first}, {"y", c.second}};
        Edges e = pt.edges();
        std::optional<Pose> g;
        std::string name;
        try {
            name = canonical_name(pt.tile);
            g = pose_from_reference(tile_from_name(name, pt.tile.context()), e);
        } catch (const UnnameableTile&) {
        }
        if (g) {
            item["tile"] = name;
            item["pose"] = *g;
        } else {
            Json ej;
            for (int s = 0; s < 4; ++s) ej[std::string(1, kSides[s])] = format_mark(e[s]);
            item["tile"] = "?";
            item["pose"] = 0;
            item["cornered"] = pt.tile.cornered;
            item["edges"] = ej;
        }
        arr.push_back(item);
    }
    return Json{{"cells", arr}};
}

MarkedPatch marked_patch_from_json(const Json& j) {
    return guarded("marked patch", [&] {
        MarkedPatch p;
        for (const auto& item : j.at("cells")) {
            Cell c{item.at("x").get<int>(), item.at("y").get<int>()};
            int g = item.value("pose", 0);
            if (g < 0 || g >= kPoses) throw FormatError("pose out of range");
            PlacedTile pt;
            if (item.contains("edges")) {
                Edges e;
                for (int s = 0; s < 4; ++s) e[s] = parse_mark(item.at("edges").at(std::string(1, kSides[s])).get<std::string>());
                pt.tile = tile_from_edges(item.value("cornered", false), apply_pose(e, pose_inverse(g)));
            } else {
                pt.tile = tile_from_name(item.at("tile").get<std::string>());
            }
            pt.pose = g;
            if (!p.cells.emplace(c, pt).second) throw FormatError("duplicate cell");
        }
        return p;
    });
}

Json atomic_tables_to_json(const AtomicTables& t) {
    Json atomic, pairs;
    for (const auto& [a, ts] : t.atomic) {
        TileSet named = ts;
        named.name = "T_" + format_atom(a);
        atomic[format_atom(a)] = tileset_to_json(named);
    }
    for (const auto& [k, ts] : t.pairs) {
        std::string key = format_atom(k.first) + "->" + format_atom(k.second);
        TileSet named = ts;
        named.name = "T_" + key;
        pairs[key] = tileset_to_json(named);
    }
    return Json{{"atomic", atomic}, {"pairs", pairs}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
}

RenderSpec swapped_palette(RenderSpec s) {
    std::swap(s.code_colors[0], s.code_colors[2]);
    std::swap(s.code_colors[1], s.code_colors[3]);
    return s;
}

std::string render_domino_svg(const DominoPatch& p, const RenderSpec& spec) {
    DominoPatch q = p;
    q.normalize();
    auto b = q.dominoes.empty() ? std::array<int, 4>{0, 0, 0, 0} : q.bbox();
    const int s = spec.scale;
    const int w = (b[2] - b[0]) * s, h = (b[3] - b[1]) * s;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << ' ' << h << "\">\n";
    o << "<g stroke=\"#000000\" stroke-width=\"1\">\n";
    for (const auto& d : q.dominoes) {
        const int dw = d.axis == Axis::H ? 2 : 1, dh = d.axis == Axis::H ? 1 : 2;
        const int x = (d.x - b[0]) * s, y = (b[3] - d.y - dh) * s;
        o << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << dw * s << "\" height=\"" << dh * s
          << "\" fill=\"" << spec.code_colors[d.code] << "\"/>\n";
        if (spec.show_codes)
            o << "<text x=\"" << num(x + dw * s / 2.0) << "\" y=\"" << num(y + dh * s / 2.0)
              << "\" font-size=\"" << s / 2 << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" stroke=\"none\">"
              << int(d.code) << "</text>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

std::string render_marked_svg(const MarkedPatch& p, const RenderSpec& spec) {
    auto b = p.bbox();
    const int s = spec.scale;
    const int w = (b[2] - b[0]) * s, h = (b[3] - b[1]) * s;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
      << w << ' ' << h << "\">\n<g>\n";
    // Outward unit normal and along-edge direction per side, in SVG axes.
    static const int nx[4] = {0, 1, 0, -1}, ny[4] = {-1, 0, 1, 0};
    for (const auto& [c, pt] : p.cells) {
        const double x0 = (c.first - b[0]) * s, y0 = (b[3] - c.second - 1) * s;
        const double cx = x0 + s / 2.0, cy = y0 + s / 2.0;
        o << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << s << "\" height=\"" << s
          << "\" fill=\"#ffffff\" stroke=\"#404040\" stroke-width=\"0.5\"/>\n";
        if (pt.tile.cornered) {
            // Reference corner is SW, carried along by the pose.
            static const int kx[4] = {0, 1, 1, 0}, ky[4] = {1, 1, 0, 0}; // SW, SE, NE, NW in SVG axes
            int k = pt.pose & 3;
            if (pt.pose >= 4) k = (k + 1) & 3;
            o << "<circle cx=\"" << num(x0 + kx[k] * s * 0.85 + s * 0.075) << "\" cy=\""
              << num(y0 + ky[k] * s * 0.85 + s * 0.075) << "\" r=\"" << num(s * 0.08) << "\" fill=\"#000000\"/>\n";
        }
        if (!spec.show_marks) continue;
        Edges e = pt.edges();
        for (int side = 0; side < 4; ++side) {
            const auto& m = e[side];
            const double ex = cx + nx[side] * s * 0.5, ey = cy + ny[side] * s * 0.5;
            const double tx = -ny[side], ty = nx[side];
            const double off = m.b * s * 0.2;
            const double mx = ex + tx * off, my = ey + ty * off;
            const double half = s * 0.1, in_x = mx - nx[side] * s * 0.18, in_y = my - ny[side] * s * 0.18;
            const std::string col = m.plain() ? spec.plain_color : spec.channel_colors[m.c];
            // Apex on the edge for a = +1, inside the tile for a = -1.
            const double base_x = m.a > 0 ? in_x : mx, base_y = m.a > 0 ? in_y : my;
            const double ax = m.a > 0 ? mx : in_x, ay = m.a > 0 ? my : in_y;
            o << "<polygon points=\"" << num(base_x + tx * half) << ',' << num(base_y + ty * half) << ' '
              << num(base_x - tx * half) << ',' << num(base_y - ty * half) << ' ' << num(ax) << ',' << num(ay)
              << "\" fill=\"" << col << "\"/>\n";
            if (spec.show_codes && m.d && !m.plain())
                o << "<text x=\"" << num(mx - nx[side] * s * 0.3) << "\" y=\"" << num(my - ny[side] * s * 0.3)
                  << "\" font-size=\"" << num(s * 0.22) << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
                  << int(*m.d) << "</text>\n";
        }
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

std::string render_ascii(const DominoPatch& p) {
    if (p.dominoes.empty()) return "";
    auto b = p.bbox();
    const int w = b[2] - b[0], h = b[3] - b[1];
    std::vector<std::string> rows(2 * h - 1);
    for (int r = 0; r < 2 * h - 1; ++r) {
        rows[r].assign(2 * w - 1, ' ');
        if (r % 2 == 0)
            for (int x = 0; x < w; ++x) rows[r][2 * x] = '.';
    }
    auto row_of = [&](int y) { return 2 * (b[3] - 1 - y); };
    for (const auto& d : p.dominoes) {
        const char ch = char('0' + d.code);
        const int x = 2 * (d.x - b[0]), r = row_of(d.y);
        rows[r][x] = ch;
        if (d.axis == Axis::H) {
            rows[r][x + 1] = '-';
            rows[r][x + 2] = ch;
        } else {
            rows[r - 1][x] = '|';
            rows[r - 2][x] = ch;
        }
    }
    std::string out;
    for (auto& r : rows) {
        while (!r.empty() && r.back() == ' ') r.pop_back();
        out += r + '\n';
    }
    return out;
}

DominoPatch parse_ascii(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    DominoPatch p;
    if (rows.empty()) return p;
    if (rows.size() % 2 == 0) throw FormatError("ascii patch needs an odd number of rows");
    const int h = int(rows.size() + 1) / 2;
    auto at = [&](int r, int x) { return x < int(rows[r].size()) ? rows[r][x] : ' '; };
    for (int r = 0; r < int(rows.size()); r += 2)
        for (int x = 0; x < int(rows[r].size()); x += 2) {
            const char ch = at(r, x);
            if (ch == '.' || ch == ' ') continue;
            if (ch < '0' || ch > '3') throw FormatError("bad cell character at row " + std::to_string(r));
            const int y = h - 1 - r / 2;
            if (at(r, x + 1) == '-') {
                if (at(r, x + 2) != ch) throw FormatError("domino halves differ at row " + std::to_string(r));
                p.dominoes.push_back({x / 2, y, Axis::H, Code(ch - '0')});
            } else if (r + 2 < int(rows.size()) && at(r + 1, x) == '|') {
                if (at(r + 2, x) != ch) throw FormatError("domino halves differ at row " + std::to_string(r));
                p.dominoes.push_back({x / 2, y - 1, Axis::V, Code(ch - '0')});
            }
        }
    p.normalize();
    return p;
}

std::string render_ascii(const MarkedPatch& p) {
    if (p.cells.empty()) return "";
    auto b = p.bbox();
    const int w = b[2] - b[0], h = b[3] - b[1];
    std::vector<std::string> rows(3 * h, std::string(3 * w, ' '));
    auto glyph = [](const EdgeMark& m) { return m.plain() ? (m.a > 0 ? '+' : '-') : char('0' + m.c); };
    for (const auto& [c, pt] : p.cells) {
        const int x = 3 * (c.first - b[0]), r = 3 * (b[3] - 1 - c.second);
        Edges e = pt.edges();
        rows[r][x + 1] = glyph(e[N]);
        rows[r + 1][x] = glyph(e[W]);
        rows[r + 1][x + 1] = pt.tile.cornered ? 'C' : pt.tile.role == Role::Outward ? 'o' : 'x';
        rows[r + 1][x + 2] = glyph(e[E]);
        rows[r + 2][x + 1] = glyph(e[S]);
    }
    std::string out;
    for (auto& r : rows) {
        while (!r.empty() && r.back() == ' ') r.pop_back();
        out += r + '\n';
    }
    return out;
}

} // namespace dt
