#include "domtile/blocks.hpp"
#include "domtile/fixtures.hpp"

#include <json.hpp>

#include <set>

namespace dt {

namespace {

using nlohmann::json;

constexpr int kLabels = 9;

int label_index(const std::string& s) {
    static const char* names[kLabels] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
    for (int i = 0; i < kLabels; ++i)
        if (s == names[i]) return i;
    throw std::invalid_argument("unknown label " + s);
}

struct Crossing {
    std::string h;
    Code y;
    int label;
};

struct RoleFrame {
    BlockType block;
    Code offset;
    std::array<VMark, kLabels> marks; // plain where the label is "+"
};

struct Frame {
    std::array<int, kLabels> mirror_ew{}, mirror_ns{};
    std::array<int, kLabels> side{};
    std::array<int, 4> child_label{};
    std::vector<Crossing> crossings;
    std::array<RoleFrame, 4> roles;
};

const Frame& frame() {
    static const Frame F = [] {
        Frame f;
        json j = json::parse(fixture("t2_frame"));
        for (auto it = j.at("mirror_ew").begin(); it != j.at("mirror_ew").end(); ++it)
            f.mirror_ew[label_index(it.key())] = label_index(it.value());
        for (auto it = j.at("mirror_ns").begin(); it != j.at("mirror_ns").end(); ++it)
            f.mirror_ns[label_index(it.key())] = label_index(it.value());
        for (auto it = j.at("sidedness").begin(); it != j.at("sidedness").end(); ++it)
            f.side[label_index(it.key())] = it.value().get<int>();
        const char* slots = "stuv";
        for (int c = 0; c < 4; ++c)
            f.child_label[c] = label_index(j.at("child_slots").at(std::string(1, slots[c])));
        for (const auto& c : j.at("crossings"))
            f.crossings.push_back({c.at("h"), Code(c.at("y").get<int>()), label_index(c.at("label"))});
        for (int r = 0; r < 4; ++r) {
            const auto& rj = j.at("roles").at(std::string(1, slots[r]));
            RoleFrame rf;
            rf.block = parse_block_type(rj.at("block").get<std::string>()[0]);
            rf.offset = Code(rj.at("offset").get<int>());
            const auto& fa = frame_assignment(rf.block);
            for (int l = 0; l < kLabels; ++l) {
                if (fa[l] == "+" || fa[l] == "x") {
                    rf.marks[l] = {kPlain, 0};
                    continue;
                }
                std::string name = j.at("labels").at(l);
                if (!rj.at("framing").contains(name))
                    throw std::runtime_error("t2 frame: no framing for marked label " + name);
                rf.marks[l] = {fa[l][0] - '0', Code(rj.at("framing").at(name).get<int>())};
            }
            f.roles[r] = rf;
        }
        return f;
    }();
    return F;
}

// Label found at position p of a block framed by e.
int acting(Code e, int p) {
    const auto& f = frame();
    if (e & 1) p = f.mirror_ew[p];
    if (e & 2) p = f.mirror_ns[p];
    return p;
}

bool reflecting(Code e) { return e == 1 || e == 2; }

Code digit_at(const Symbol& s, int slot) { return Code(__builtin_ctz(s.digits[slot])); }

std::string vertical(const VMark& m) {
    if (m.z == kPlain) return "+";
    return std::string(1, char('0' + m.z)) + char('0' + m.w);
}

std::string canon(const std::string& n) { return canonical_name(tile_from_name(n, Context::T2)); }

std::string crossing_name(const std::string& h, Code y, const VMark& v) {
    std::string s = "[" + h;
    if (h != "-") s += char('0' + y);
    return s + "|" + vertical(v) + "]";
}

} // namespace

std::string format_atom(const Atom& a) {
    std::string s = "....";
    s[a.slot] = char('0' + a.digit);
    return s;
}

std::string format_vmark(const VMark& m) {
    if (m.z == kGeneric) return "x";
    return vertical(m);
}

BlockType slot_block(int slot) { return frame().roles.at(slot).block; }

T2Substitution t2_block_substitute(const Symbol& s, const T2State& st) {
    if (!is_deterministic(s)) throw std::invalid_argument("t2_block_substitute needs a deterministic symbol");
    const auto& f = frame();
    const auto& role = f.roles.at(st.slot);
    T2Substitution out;
    Atom self{st.slot, st.orient};
    out.tally.push_back({canon("[-|+]"), TallySource::Common, {}, {}});
    for (int l = 0; l < kLabels; ++l)
        if (role.marks[l].z != kPlain)
            out.tally.push_back({canon(crossing_name("-", 0, role.marks[l])), TallySource::Common, {}, {}});
    for (const auto& c : f.crossings) {
        const VMark& v = role.marks[c.label];
        Code y = nim_add(nim_add(c.y, role.offset), st.orient);
        bool common = c.h == "0" && v.z == kPlain;
        out.tally.push_back({canon(crossing_name(c.h, y, v)), common ? TallySource::Common : TallySource::Atomic,
                             self, {}});
    }
    Code eps = nim_add(st.orient, role.offset);
    for (int c = 0; c < 4; ++c) {
        Code d = digit_at(s, c);
        int src = acting(eps, f.child_label[c]);
        const VMark& x = role.marks[src];
        Code ysel = 0;
        if (x.z != kPlain) {
            int side = f.side[src] * (reflecting(eps) ? -1 : 1);
            ysel = side > 0 ? 1 : 0;
        }
        Code y = nim_add(d, ysel);
        Atom child{c, d};
        for (const auto& n : {crossing_name("3", y, x), crossing_name("-3", nim_add(y, 2), x)})
            out.tally.push_back({canon(n), TallySource::Pair, child, self});
        out.children.push_back({c, d, x});
    }
    return out;
}

std::vector<T2State> t2_seeds(const Symbol& s) {
    std::vector<T2State> out;
    for (int r = 0; r < 4; ++r) out.push_back({r, digit_at(s, r), {}});
    return out;
}

TileSet t2_closure(const Symbol& s, int rounds) {
    TileSet out = catalogue("T+2");
    out.insert(tile_from_name("[-|+]"));
    std::set<T2State> seen;
    std::vector<T2State> frontier = t2_seeds(s);
    const auto& f = frame();
    for (int round = 0; !frontier.empty(); ++round) {
        std::vector<T2State> next;
        for (const auto& st : frontier) {
            if (!seen.insert(st).second) continue;
            for (const auto& m : f.roles[st.slot].marks)
                if (m.z != kPlain) out.insert(tile_from_name(crossing_name("-", 0, m)));
            if (rounds >= 0 && round >= rounds) continue;
            auto sub = t2_block_substitute(s, st);
            for (const auto& t : sub.tally) out.insert(tile_from_name(t.tile));
            for (const auto& c : sub.children) next.push_back(c);
        }
        frontier = std::move(next);
        if (rounds >= 0 && round >= rounds) break;
    }
    return out;
}

const AtomicTables& derive_atomics() {
    static const AtomicTables T = [] {
        AtomicTables t;
        for (const auto& s : deterministic_symbols()) {
            std::set<T2State> seen;
            // Any block may sit above the children of s, so parents range over every atom.
            std::vector<T2State> work;
            for (int r = 0; r < 4; ++r)
                for (Code e = 0; e < 4; ++e) work.push_back({r, e, {}});
            while (!work.empty()) {
                T2State st = work.back();
                work.pop_back();
                if (!seen.insert(st).second) continue;
                auto sub = t2_block_substitute(s, st);
                for (const auto& item : sub.tally) {
                    Tile tile = tile_from_name(item.tile);
                    if (item.source == TallySource::Atomic) {
                        auto& ts = t.atomic[item.child];
                        if (ts.name.empty()) ts.name = "T_" + format_atom(item.child);
                        ts.insert(tile);
                    } else if (item.source == TallySource::Pair) {
                        auto& ts = t.pairs[{item.parent, item.child}];
                        if (ts.name.empty())
                            ts.name = "T_" + format_atom(item.parent) + "->" + format_atom(item.child);
                        ts.insert(tile);
                    }
                }
                for (const auto& c : sub.children) work.push_back(c);
            }
        }
        return t;
    }();
    return T;
}

} // namespace dt
