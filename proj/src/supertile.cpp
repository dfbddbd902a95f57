#include "domtile/fixtures.hpp"
#include "domtile/synthesis.hpp"

#include <json.hpp>

namespace dt {

namespace {

using json = nlohmann::json;

struct LayoutFixture {
    int period = 4;
    Cell parity{0, 0};
    Cell centre{1, 1};
    std::vector<std::pair<int, int>> sizes;
    int max_level = 0;
};

const LayoutFixture& layout_fixture() {
    static const LayoutFixture f = [] {
        json j = json::parse(fixture("supertile_layout"));
        LayoutFixture out;
        out.period = j.at("half_block_period");
        out.parity = {j.at("cornered_parity")[0], j.at("cornered_parity")[1]};
        out.centre = {j.at("half_block_centre")[0], j.at("half_block_centre")[1]};
        for (const auto& l : j.at("levels")) {
            if (l.at("level").get<int>() != int(out.sizes.size())) throw LayoutError("layout levels out of order");
            out.sizes.push_back({l.at("width"), l.at("height")});
        }
        out.max_level = j.at("max_level");
        return out;
    }();
    return f;
}

} // namespace

std::string SupertileContext::label() const {
    if (symbol) return format_symbol(*symbol);
    std::string s;
    for (auto r : rules) s += (s.empty() ? "" : "+") + to_string(r);
    return s;
}

TileSet SupertileContext::tiles() const {
    if (symbol) {
        if (!is_deterministic(*symbol)) throw std::invalid_argument("supertiles need a deterministic symbol");
        return synthesize(*symbol);
    }
    if (rules.empty()) throw std::invalid_argument("empty rule system");
    auto t = closure(rules).tiles;
    t.name = "T_" + label();
    return t;
}

int max_supertile_level() { return layout_fixture().max_level; }

SupertileLayout supertile_layout(int level) {
    const auto& f = layout_fixture();
    if (level < 0 || level > f.max_level || f.sizes.empty())
        throw LayoutError("no supertile layout for level " + std::to_string(level));
    auto [w, h] = f.sizes[std::min<std::size_t>(level, f.sizes.size() - 1)];
    for (int l = int(f.sizes.size()); l <= level; ++l) {
        w = 2 * w + 1;
        h = 2 * h + 1;
    }
    SupertileLayout out{w, h, {}, {}};
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x % 2 == f.parity.first && y % 2 == f.parity.second) out.cornered.push_back({x, y});
            else if (x % f.period == f.centre.first && y % f.period == f.centre.second) out.centres.push_back({x, y});
        }
    return out;
}

MarkedSupertile build_marked_supertile(const SupertileContext& ctx, int level, std::uint64_t budget) {
    auto lay = supertile_layout(level);
    MarkedSupertile out;
    out.level = level;
    out.tiles = ctx.tiles();

    std::vector<Tile> cornered, centres;
    for (const auto& t : out.tiles.tiles()) {
        if (t.cornered) cornered.push_back(t);
        else if (t.role == Role::Outward) centres.push_back(t);
    }
    TileSet c("cornered", cornered), o("outward", centres);
    Region r;
    r.width = lay.width;
    r.height = lay.height;
    for (const auto& cell : lay.cornered) r.allowed[cell] = c;
    for (const auto& cell : lay.centres) r.allowed[cell] = o;

    auto res = solve(out.tiles, r, Mode::First, budget);
    if (res.status != Status::Sat)
        throw std::runtime_error("level " + std::to_string(level) + " layout not completed for " + ctx.label() +
                                 " (" + to_string(res.status) + ")");
    out.patch = std::move(res.witnesses.front());

    std::vector<Tile> used;
    for (const auto& [cell, pt] : out.patch.cells) used.push_back(pt.tile);
    out.blocks = block_admissibility(TileSet("used", used));
    return out;
}

} // namespace dt
