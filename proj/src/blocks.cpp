#include "domtile/blocks.hpp"
#include "domtile/fixtures.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace dt {

namespace {

using nlohmann::json;

struct BlockData {
    std::map<BlockType, MarkingFrame> frames;
    std::map<BlockType, TileSet> tiles;
    std::vector<Production> productions;
};

const BlockData& data() {
    static const BlockData D = [] {
        BlockData d;
        json j = json::parse(fixture("block_productions"));
        for (auto it = j.at("frames").begin(); it != j.at("frames").end(); ++it) {
            MarkingFrame f;
            for (int i = 0; i < 9; ++i) f[i] = it.value().at(i).get<std::string>();
            d.frames[parse_block_type(it.key()[0])] = f;
        }
        for (auto it = j.at("block_tiles").begin(); it != j.at("block_tiles").end(); ++it) {
            std::string key(1, it.key()[0]);
            d.tiles[parse_block_type(key[0])] =
                tileset_from_names("T_" + key, it.value().get<std::vector<std::string>>(), Context::T1);
        }
        for (const auto& p : j.at("productions")) {
            Production pr;
            pr.rule = parse_rule(p.at("rule").get<std::string>());
            pr.block = parse_block_type(p.at("block").get<std::string>()[0]);
            if (p.contains("case")) pr.pibar_case = p.at("case").get<std::string>() == "02" ? 0 : 1;
            pr.children = p.at("children").get<std::vector<std::string>>();
            pr.tally = p.at("tally").get<std::vector<std::string>>();
            d.productions.push_back(std::move(pr));
        }
        return d;
    }();
    return D;
}

// Resolves an argument such as "x", "-x", "+" or a digit against the parent's x.
// The sign of -x only reverses direction; its mark class is that of x.
int resolve(const std::string& arg, int x) {
    if (arg == "x" || arg == "-x") return x;
    if (arg == "+") return kPlain;
    return arg.at(0) - '0';
}

char class_char(int x) { return x == kPlain ? '+' : char('0' + x); }

} // namespace

char to_char(BlockType b) { return "UJIH"[static_cast<int>(b)]; }

BlockType parse_block_type(char c) {
    switch (c) {
    case 'U': return BlockType::U;
    case 'J': return BlockType::J;
    case 'I': return BlockType::I;
    case 'H': return BlockType::H;
    }
    throw std::invalid_argument(std::string("unknown block type ") + c);
}

std::string to_string(Rule r) {
    static const char* names[] = {"pi", "par", "xi", "pibar"};
    return names[static_cast<int>(r)];
}

Rule parse_rule(const std::string& s) {
    for (Rule r : {Rule::Pi, Rule::Par, Rule::Xi, Rule::PiBar})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown rule " + s);
}

const MarkingFrame& frame_assignment(BlockType b) { return data().frames.at(b); }

std::string format_state(const BlockState& s) {
    std::string out(1, to_char(s.type));
    out += '(';
    out += s.x == kGeneric ? std::string("x") : std::string(1, class_char(s.x));
    return out + ')';
}

const std::vector<Production>& productions() { return data().productions; }

std::vector<Substitution> block_substitute(Rule rule, const BlockState& st) {
    std::vector<Substitution> out;
    for (const auto& p : productions()) {
        if (p.rule != rule || p.block != st.type) continue;
        Substitution s;
        for (const auto& c : p.children)
            s.children.push_back({parse_block_type(c[0]), resolve(c.substr(1), st.x)});
        for (const auto& t : p.tally) {
            std::string name = t;
            auto pos = name.find('x');
            if (pos != std::string::npos) {
                if (st.x == kGeneric) continue;
                name[pos] = class_char(st.x);
            }
            s.tally.push_back(canonical_name(tile_from_name(name, Context::T1)));
        }
        out.push_back(std::move(s));
    }
    if (out.empty())
        throw RuleError("rule " + to_string(rule) + " does not apply to block " + std::string(1, to_char(st.type)));
    return out;
}

ClosureResult closure(const std::vector<Rule>& rules, std::vector<BlockState> seeds) {
    auto applies = [](Rule r, BlockType b) {
        return std::any_of(productions().begin(), productions().end(),
                           [&](const Production& p) { return p.rule == r && p.block == b; });
    };
    if (seeds.empty())
        for (BlockType b : {BlockType::U, BlockType::J, BlockType::I, BlockType::H})
            for (Rule r : rules)
                if (applies(r, b)) {
                    seeds.push_back({b, kGeneric});
                    break;
                }
    ClosureResult res;
    res.tiles = catalogue("T+");
    std::vector<BlockState> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        BlockState st = work.back();
        work.pop_back();
        if (!res.states.insert(st).second) continue;
        for (Rule r : rules) {
            if (!applies(r, st.type)) continue;
            for (const auto& sub : block_substitute(r, st)) {
                for (const auto& n : sub.tally) res.tiles.insert(tile_from_name(n, Context::T1));
                for (const auto& c : sub.children)
                    if (!res.states.count(c)) work.push_back(c);
            }
        }
    }
    return res;
}

const TileSet& block_tiles(BlockType b) { return data().tiles.at(b); }

std::vector<BlockType> block_admissibility(const TileSet& t) {
    std::vector<BlockType> out;
    for (BlockType b : {BlockType::U, BlockType::J, BlockType::I, BlockType::H})
        if (block_tiles(b).subset_of(t)) out.push_back(b);
    return out;
}

Code y_of(const EdgeMark& x) {
    if (x.a > 0) return x.b > 0 ? 1 : 0;
    return x.b < 0 ? 3 : 2;
}

} // namespace dt
