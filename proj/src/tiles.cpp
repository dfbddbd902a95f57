#include "domtile/tiles.hpp"
#include "domtile/fixtures.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace dt {

namespace {

using nlohmann::json;

struct Layout {
    std::array<Edges, 2> outward_proto;            // with d = 0 where present
    std::array<std::array<std::string, 2>, 4> out_text;
    std::map<std::string, std::array<std::string, 2>> horizontal; // W, E templates
    std::array<std::string, 2> vert_marked, vert_plain;           // N, S templates
};

const Layout& layout() {
    static const Layout L = [] {
        Layout l;
        json j = json::parse(fixture("tile_layout"));
        for (const auto& o : j.at("outward")) {
            int k = o.at("kind").get<int>() - 1;
            const auto& e = o.at("edges");
            l.out_text[k] = {};
            const char* sides[4] = {"N", "E", "S", "W"};
            for (int s = 0; s < 4; ++s) l.outward_proto[k][s] = parse_mark(e.at(sides[s]).get<std::string>(), Context::T1);
        }
        for (auto it = j.at("horizontal").begin(); it != j.at("horizontal").end(); ++it)
            l.horizontal[it.key()] = {it.value().at("W").get<std::string>(), it.value().at("E").get<std::string>()};
        l.vert_marked = {j.at("vertical").at("marked").at("N"), j.at("vertical").at("marked").at("S")};
        l.vert_plain = {j.at("vertical").at("plain").at("N"), j.at("vertical").at("plain").at("S")};
        return l;
    }();
    return L;
}

// Expands a template such as "--0d" or "++zw". Letters d,b,q,p offset y; z,w
// are substituted directly.
EdgeMark instantiate(const std::string& tpl, Context ctx, int y, int z, int w) {
    std::string s;
    for (char ch : tpl) {
        switch (ch) {
        case 'd': s += char('0' + nim_add(Code(y), 0)); break;
        case 'b': s += char('0' + nim_add(Code(y), 1)); break;
        case 'q': s += char('0' + nim_add(Code(y), 2)); break;
        case 'p': s += char('0' + nim_add(Code(y), 3)); break;
        case 'z': s += char('0' + z); break;
        case 'w': s += char('0' + w); break;
        default: s += ch;
        }
    }
    if (ctx == Context::T1 && s.size() == 4) s.pop_back();
    return parse_mark(s, ctx);
}

int edge_id(const EdgeMark& m) { return m.id(); }

struct Namebook {
    std::map<TileKey, std::string> t1, t2;
};

std::string name_t1(const std::string& h, char v) { return "[" + h + v + "]"; }

std::string name_t2(const std::string& x, int y, int z, int w) {
    std::string s = "[" + x;
    if (x != "-") s += char('0' + y);
    s += '|';
    if (z < 0) s += '+';
    else {
        s += char('0' + z);
        s += char('0' + w);
    }
    return s + "]";
}

const std::vector<std::string> kHoriz = {"-", "0", "1", "3", "-3"};

std::string outward_name(int kind, bool cornered, std::optional<Code> d) {
    std::string s = std::string("<") + (cornered ? 'c' : 'u') + char('0' + kind);
    if (d) s += std::string(":") + char('0' + *d);
    return s + ">";
}

const Namebook& namebook() {
    static const Namebook B = [] {
        Namebook b;
        auto put = [](std::map<TileKey, std::string>& m, const Tile& t, const std::string& n) {
            auto [it, fresh] = m.emplace(t.key(), n);
            if (!fresh && n < it->second) it->second = n;
        };
        for (const auto& h : kHoriz)
            for (char v : std::string("+0123")) put(b.t1, make_crossing_t1(h, v), name_t1(h, v));
        for (const auto& x : kHoriz) {
            int ny = x == "-" ? 1 : 4;
            for (int y = 0; y < ny; ++y) {
                put(b.t2, make_crossing_t2(x, y, -1, 0), name_t2(x, y, -1, 0));
                for (int z = 0; z < 4; ++z)
                    for (int w = 0; w < 4; ++w) put(b.t2, make_crossing_t2(x, y, z, w), name_t2(x, y, z, w));
            }
        }
        for (int kind = 1; kind <= 2; ++kind)
            for (bool c : {false, true}) {
                put(b.t1, make_outward(kind, c, std::nullopt), outward_name(kind, c, std::nullopt));
                for (Code d = 0; d < 4; ++d) put(b.t2, make_outward(kind, c, d), outward_name(kind, c, d));
            }
        return b;
    }();
    return B;
}

} // namespace

Pose pose_compose(Pose g, Pose h) {
    // Represent as (r, m): x -> R^r M^m x. (r1,m1)(r2,m2) = (r1 + (-1)^m1 r2, m1 xor m2).
    int r1 = g & 3, m1 = g >> 2, r2 = h & 3, m2 = h >> 2;
    int r = (r1 + (m1 ? -r2 : r2)) & 3;
    return r | ((m1 ^ m2) << 2);
}

Pose pose_inverse(Pose g) {
    for (Pose h = 0; h < kPoses; ++h)
        if (pose_compose(g, h) == 0) return h;
    return 0;
}

Edges apply_pose(const Edges& e, Pose g) {
    Edges cur = e;
    if (g >= 4) {
        Edges m;
        m[N] = mark_reflect(cur[N]);
        m[S] = mark_reflect(cur[S]);
        m[E] = mark_reflect(cur[W]);
        m[W] = mark_reflect(cur[E]);
        cur = m;
    }
    for (int r = 0; r < (g & 3); ++r) {
        Edges n;
        for (int i = 0; i < 4; ++i) n[i] = cur[(i + 1) % 4];
        cur = n;
    }
    return cur;
}

TileKey Tile::key() const {
    TileKey best{};
    bool first = true;
    for (Pose g = 0; g < kPoses; ++g) {
        Edges im = apply_pose(edges, g);
        TileKey k{cornered ? 1 : 0, edge_id(im[0]), edge_id(im[1]), edge_id(im[2]), edge_id(im[3])};
        if (first || k < best) best = k;
        first = false;
    }
    return best;
}

Tile Tile::posed(Pose g) const {
    Tile t = *this;
    t.edges = apply_pose(edges, g);
    return t;
}

Tile make_crossing_t1(const std::string& h, char v) {
    const auto& L = layout();
    auto it = L.horizontal.find(h);
    if (it == L.horizontal.end()) throw UnnameableTile("unknown horizontal class " + h);
    Tile t;
    t.role = Role::Crossing;
    t.edges[W] = instantiate(it->second[0], Context::T1, 0, 0, 0);
    t.edges[E] = instantiate(it->second[1], Context::T1, 0, 0, 0);
    if (v == '+') {
        t.edges[N] = instantiate(L.vert_plain[0], Context::T1, 0, 0, 0);
        t.edges[S] = instantiate(L.vert_plain[1], Context::T1, 0, 0, 0);
    } else {
        t.edges[N] = instantiate(L.vert_marked[0], Context::T1, 0, v - '0', 0);
        t.edges[S] = instantiate(L.vert_marked[1], Context::T1, 0, v - '0', 0);
    }
    t.name = name_t1(h, v);
    return t;
}

Tile make_crossing_t2(const std::string& x, int y, int z, int w) {
    const auto& L = layout();
    auto it = L.horizontal.find(x);
    if (it == L.horizontal.end()) throw UnnameableTile("unknown horizontal class " + x);
    if (x == "-") y = 0;
    Tile t;
    t.role = Role::Crossing;
    t.edges[W] = instantiate(it->second[0], Context::T2, y, 0, 0);
    t.edges[E] = instantiate(it->second[1], Context::T2, y, 0, 0);
    const auto& v = z < 0 ? L.vert_plain : L.vert_marked;
    t.edges[N] = instantiate(v[0], Context::T2, y, z, w);
    t.edges[S] = instantiate(v[1], Context::T2, y, z, w);
    t.name = name_t2(x, y, z, w);
    return t;
}

Tile make_outward(int kind, bool cornered, std::optional<Code> d) {
    const auto& L = layout();
    Tile t;
    t.role = Role::Outward;
    t.cornered = cornered;
    for (int s = 0; s < 4; ++s) {
        EdgeMark m = L.outward_proto[kind - 1][s];
        if (d) m.d = m.plain() ? Code(0) : *d;
        t.edges[s] = m;
    }
    t.name = outward_name(kind, cornered, d);
    return t;
}

std::string canonical_name(const Tile& t) {
    const auto& book = t.context() == Context::T1 ? namebook().t1 : namebook().t2;
    auto it = book.find(t.key());
    if (it == book.end()) throw UnnameableTile("tile is not in a known naming family");
    return it->second;
}

Tile tile_from_edges(bool cornered, const Edges& e) {
    Tile t;
    t.cornered = cornered;
    t.edges = e;
    bool out = std::all_of(e.begin(), e.end(), [](const EdgeMark& m) { return m.a > 0; });
    t.role = out ? Role::Outward : Role::Crossing;
    try {
        t.name = canonical_name(t);
    } catch (const UnnameableTile&) {
        t.name = "?";
    }
    return t;
}

Tile tile_from_name(const std::string& name, Context ctx) {
    auto bad = [&] { return UnnameableTile("cannot parse tile name '" + name + "'"); };
    if (name.size() >= 4 && name.front() == '<') {
        bool c = name[1] == 'c';
        int kind = name[2] - '0';
        if ((name[1] != 'c' && name[1] != 'u') || (kind != 1 && kind != 2)) throw bad();
        std::optional<Code> d;
        if (name.size() == 6 && name[3] == ':' && name[4] >= '0' && name[4] <= '3') d = Code(name[4] - '0');
        else if (name.size() != 4) throw bad();
        Tile t = make_outward(kind, c, d);
        t.name = canonical_name(t);
        return t;
    }
    if (name.size() < 3 || name.front() != '[' || name.back() != ']') throw bad();
    std::string body = name.substr(1, name.size() - 2);
    auto bar = body.find('|');
    std::string head = body.substr(0, bar == std::string::npos ? body.size() : bar);
    std::string h;
    std::size_t i = 0;
    if (head.size() == 3 && head.compare(0, 2, "-3") == 0) {
        h = "-3";
        i = 2;
    } else {
        h = head.substr(0, 1);
        i = 1;
    }
    if (h != "-" && h != "0" && h != "1" && h != "3" && h != "-3") throw bad();
    Tile t;
    if (bar == std::string::npos) {
        if (ctx != Context::T1 && body.size() == i + 1) ctx = Context::T1;
        if (body.size() != i + 1) throw bad();
        char v = body[i];
        if (v != '+' && (v < '0' || v > '3')) throw bad();
        t = make_crossing_t1(h, v);
    } else {
        int y = 0;
        if (h != "-") {
            if (bar != i + 1) throw bad();
            y = body[i] - '0';
        } else if (bar != i) {
            throw bad();
        }
        std::string vert = body.substr(bar + 1);
        if (y < 0 || y > 3) throw bad();
        if (vert == "+") t = make_crossing_t2(h, y, -1, 0);
        else if (vert.size() == 2 && vert[0] >= '0' && vert[0] <= '3' && vert[1] >= '0' && vert[1] <= '3')
            t = make_crossing_t2(h, y, vert[0] - '0', vert[1] - '0');
        else
            throw bad();
    }
    t.name = canonical_name(t);
    return t;
}

bool congruent(const Tile& a, const Tile& b) { return a.key() == b.key(); }

std::vector<std::pair<Pose, Edges>> placements(const Tile& t) {
    std::vector<std::pair<Pose, Edges>> out;
    std::set<std::array<int, 4>> seen;
    for (Pose g = 0; g < kPoses; ++g) {
        Edges e = apply_pose(t.edges, g);
        std::array<int, 4> k{e[0].id(), e[1].id(), e[2].id(), e[3].id()};
        if (seen.insert(k).second) out.emplace_back(g, e);
    }
    return out;
}

Tile forget_d(const Tile& t) {
    if (t.context() != Context::T2) throw ContextError("forget_d: tile is not in T2");
    Tile r = t;
    for (auto& m : r.edges) m.d.reset();
    r.name = canonical_name(r);
    return r;
}

Tile tile_shift(const Tile& t, Code k) {
    if (t.context() != Context::T2) throw ContextError("tile_shift: T1 tiles carry no framing");
    Tile r = t;
    for (auto& m : r.edges) m = mark_shift(m, k);
    r.name = canonical_name(r);
    return r;
}

TileSet::TileSet(std::string n, const std::vector<Tile>& ts) : name(std::move(n)) {
    for (const auto& t : ts) insert(t);
}

bool TileSet::insert(const Tile& t) {
    if (!members_.empty() && members_.begin()->second.context() != t.context())
        throw ContextError("TileSet: mixed T1/T2 tiles");
    Tile c = t;
    if (c.name.empty() || c.name == "?") {
        try {
            c.name = canonical_name(c);
        } catch (const UnnameableTile&) {
            c.name = "?";
        }
    }
    return members_.emplace(c.key(), c).second;
}

bool TileSet::contains(const std::string& tile_name) const {
    Context ctx = members_.empty() ? Context::T2 : context();
    return contains(tile_from_name(tile_name, ctx));
}

std::vector<Tile> TileSet::tiles() const {
    std::vector<Tile> v;
    for (const auto& [k, t] : members_) v.push_back(t);
    std::sort(v.begin(), v.end(), [](const Tile& a, const Tile& b) {
        return a.name != b.name ? a.name < b.name : a.key() < b.key();
    });
    return v;
}

std::vector<std::string> TileSet::names() const {
    std::vector<std::string> v;
    for (const auto& t : tiles()) v.push_back(t.name);
    return v;
}

TileSet TileSet::united(const TileSet& o, std::string n) const {
    TileSet r(n.empty() ? name : n);
    r.members_ = members_;
    for (const auto& [k, t] : o.members_) r.members_.emplace(k, t);
    return r;
}

TileSet TileSet::minus(const TileSet& o, std::string n) const {
    TileSet r(n.empty() ? name : n);
    for (const auto& [k, t] : members_)
        if (!o.members_.count(k)) r.members_.emplace(k, t);
    return r;
}

bool TileSet::subset_of(const TileSet& o) const {
    return std::all_of(members_.begin(), members_.end(), [&](const auto& kv) { return o.members_.count(kv.first) != 0; });
}

Context TileSet::context() const { return members_.empty() ? Context::T2 : members_.begin()->second.context(); }

TileSet tileset_shift(const TileSet& t, Code k) {
    TileSet r(t.name);
    for (const auto& x : t.tiles()) r.insert(tile_shift(x, k));
    return r;
}

TileSet tileset_from_names(const std::string& set_name, const std::vector<std::string>& names, Context ctx) {
    TileSet r(set_name);
    for (const auto& n : names) r.insert(tile_from_name(n, ctx));
    return r;
}

namespace {

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

TileSet t1_names(const std::string& n, const std::string& list) {
    return tileset_from_names(n, split(list), Context::T1);
}

std::map<std::string, TileSet> build_catalogues() {
    std::map<std::string, TileSet> c;
    TileSet tplus("T+");
    for (int kind = 1; kind <= 2; ++kind)
        for (bool corner : {false, true}) tplus.insert(make_outward(kind, corner, std::nullopt));
    c["T+"] = tplus;

    TileSet thv("Thv");
    for (const auto& h : kHoriz)
        for (char v : std::string("0123+")) {
            if (h == "0" && (v == '0' || v == '1')) continue;
            thv.insert(make_crossing_t1(h, v));
        }
    c["Thv"] = thv;
    c["T1"] = tplus.united(thv, "T1");
    TileSet k1("K1");
    for (const auto& h : {std::string("0"), std::string("1")})
        for (char v : std::string("0123"))
            if (thv.contains(make_crossing_t1(h, v))) k1.insert(make_crossing_t1(h, v));
    c["K1"] = k1;
    c["U1"] = thv.minus(k1, "U1");

    c["T_U"] = t1_names("T_U", "[11] [-0] [0+] [1+]");
    c["T_J"] = t1_names("T_J", "[03] [10] [-1] [-2] [0+] [1+]");
    c["T_I"] = t1_names("T_I", "[02] [-3] [1+]");
    c["T_H"] = t1_names("T_H", "[12] [13] [0+] [-+]");
    c["T_Pi"] = tplus.united(t1_names("", "[02] [11] [32] [-32] [-0] [-1] [-3] [-+] [0+] [1+] [3+] [-3+]"), "T_Pi");
    c["T_Par"] = tplus.united(
        t1_names("", "[03] [10] [30] [-30] [-0] [-1] [-2] [-3] [-+] [0+] [1+] [3+] [-3+]"), "T_Par");
    c["T_Xi"] = tplus.united(
        t1_names("", "[11] [12] [13] [30] [-30] [-0] [-1] [-2] [-3] [-+] [0+] [1+] [3+] [-3+]"), "T_Xi");
    c["T_Pibar"] = c["T1"].minus(t1_names("", "[02]"), "T_Pibar");

    TileSet tp2("T+2");
    for (int kind = 1; kind <= 2; ++kind)
        for (bool corner : {false, true})
            for (Code d = 0; d < 4; ++d) tp2.insert(make_outward(kind, corner, d));
    c["T+2"] = tp2;

    TileSet k2("K2");
    for (int d = 0; d < 4; ++d) {
        k2.insert(make_crossing_t2("0", d, 3, 0));
        k2.insert(make_crossing_t2("0", d, 3, 2));
        for (int zw : {0, 2, 11, 13, 21, 23, 31, 33}) k2.insert(make_crossing_t2("1", d, zw / 10, zw % 10));
    }
    c["K2"] = k2;

    TileSet u2("U2");
    for (const auto& x : {std::string("3"), std::string("-3")})
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z)
                for (int w = 0; w < 4; ++w) u2.insert(make_crossing_t2(x, y, z, w));
    for (int z = 0; z < 4; ++z)
        for (int w = 0; w < 4; ++w) u2.insert(make_crossing_t2("-", 0, z, w));
    for (const auto& n : split("[00|+] [01|+] [10|+] [11|+] [12|+] [13|+] [30|+] [-30|+] [32|+] [-32|+] [-|+]"))
        u2.insert(tile_from_name(n));
    c["U2"] = u2;

    TileSet t0("T0");
    t0.insert(tile_from_name("[-|+]"));
    t0.insert(tile_from_name("[00|+]"));
    t0.insert(tile_from_name("[01|+]"));
    for (int z = 0; z < 4; ++z)
        for (int w = 0; w < 4; ++w) t0.insert(make_crossing_t2("-", 0, z, w));
    c["T0"] = t0;
    c["T2"] = tp2.united(k2).united(u2, "T2");
    for (auto& [n, s] : c) s.name = n;
    return c;
}

} // namespace

const TileSet& catalogue(const std::string& name) {
    static const std::map<std::string, TileSet> C = build_catalogues();
    auto it = C.find(name);
    if (it == C.end()) throw std::invalid_argument("unknown catalogue '" + name + "'");
    return it->second;
}

std::vector<std::string> catalogue_names() {
    return {"T1", "T+", "Thv", "K1", "U1", "T_U", "T_J", "T_I", "T_H", "T_Pi",
            "T_Par", "T_Xi", "T_Pibar", "T+2", "K2", "U2", "T0", "T2"};
}

} // namespace dt
