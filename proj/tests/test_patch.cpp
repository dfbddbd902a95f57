#include "domtile/patch.hpp"
#include "domtile/synthesis.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dt;

namespace {

// Cell-by-cell enumeration pruned with verify_patch.
std::uint64_t brute_count(const TileSet& t, int w, int h) {
    std::vector<PlacedTile> opts;
    for (const auto& tile : t.tiles())
        for (const auto& [g, e] : placements(tile)) opts.push_back({tile, g});
    MarkedPatch p;
    std::uint64_t n = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == w * h) {
            ++n;
            return;
        }
        Cell c{i % w, i / w};
        for (const auto& o : opts) {
            p.cells[c] = o;
            if (verify_patch(t, p).empty()) self(self, i + 1);
        }
        p.cells.erase(c);
    };
    rec(rec, 0);
    return n;
}

TileSet random_subset(const TileSet& from, std::size_t k, std::mt19937& rng) {
    auto ts = from.tiles();
    std::shuffle(ts.begin(), ts.end(), rng);
    ts.resize(std::min(k, ts.size()));
    return TileSet("sub", ts);
}

} // namespace

TEST_CASE("solver counts agree with brute force on small free regions") {
    std::mt19937 rng(2024);
    const auto& t1 = catalogue("T1");
    for (int trial = 0; trial < 5; ++trial) {
        auto sub = random_subset(t1, 7, rng);
        for (auto [w, h] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
            INFO(trial, " ", w, "x", h);
            auto c = count_tilings(sub, w, h);
            REQUIRE(c.has_value());
            CHECK(*c == brute_count(sub, w, h));
        }
    }
    CHECK(*count_tilings(catalogue("T_Pi"), 2, 2) == brute_count(catalogue("T_Pi"), 2, 2));
}

TEST_CASE("enumerated witnesses verify and are distinct") {
    Region r;
    r.width = 2;
    r.height = 2;
    const auto& t = catalogue("T_Par");
    auto res = solve(t, r, Mode::All);
    CHECK(res.status == Status::Sat);
    CHECK(res.witnesses.size() == res.count);
    for (const auto& w : res.witnesses) CHECK(verify_patch(t, w).empty());
    std::set<std::vector<std::pair<std::string, int>>> seen;
    for (const auto& w : res.witnesses) {
        std::vector<std::pair<std::string, int>> k;
        for (const auto& [c, pt] : w.cells) {
            auto e = pt.edges();
            k.push_back({canonical_name(pt.tile), e[0].id() * 1000000 + e[1].id() * 10000 + e[2].id() * 100 + e[3].id()});
        }
        seen.insert(k);
    }
    CHECK(seen.size() == res.witnesses.size());
}

TEST_CASE("verify_patch reports each violation kind") {
    const auto& t = catalogue("T1");
    CHECK(verify_patch(t, MarkedPatch{}).empty());

    std::vector<Tile> cornered;
    for (const auto& tile : t.tiles())
        if (tile.cornered) cornered.push_back(tile);
    REQUIRE(!cornered.empty());
    MarkedPatch p;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) p.cells[{x, y}] = {cornered[0], 0};
    auto v = verify_patch(t, p);
    CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.kind == ViolationKind::Vertex; }));

    MarkedPatch q;
    q.cells[{0, 0}] = {*synthesize(parse_symbol("1023")).tiles().rbegin(), 0};
    auto m = verify_patch(t, q);
    CHECK(m.size() == 1);
    CHECK(m[0].kind == ViolationKind::Membership);
}

TEST_CASE("empty tile set and fixed boundaries") {
    Region r;
    r.width = 2;
    r.height = 2;
    CHECK(solve(TileSet("empty"), r).status == Status::Unsat);

    // A solution stays a solution when its own boundary marks are fixed.
    const auto& t = catalogue("T_Pi");
    auto first = solve(t, r);
    REQUIRE(first.status == Status::Sat);
    const auto& w = first.witnesses.at(0);
    Region f = r;
    f.boundary = Boundary::Fixed;
    for (int i = 0; i < 2; ++i) {
        f.outside[N].push_back(mark_partner(w.cells.at({i, 1}).edges()[N]));
        f.outside[S].push_back(mark_partner(w.cells.at({i, 0}).edges()[S]));
        f.outside[E].push_back(mark_partner(w.cells.at({1, i}).edges()[E]));
        f.outside[W].push_back(mark_partner(w.cells.at({0, i}).edges()[W]));
    }
    auto fixed = solve(t, f, Mode::Count);
    CHECK(fixed.status == Status::Sat);
    CHECK(fixed.count >= 1);
    CHECK(fixed.count < solve(t, r, Mode::Count).count);
}

TEST_CASE("presets restrict the search") {
    Region r;
    r.width = 3;
    r.height = 3;
    const auto& t = catalogue("T_Pi");
    auto all = solve(t, r, Mode::Count);
    auto w = solve(t, r).witnesses.at(0);
    r.preset[{1, 1}] = w.cells.at({1, 1});
    auto some = solve(t, r, Mode::Count);
    CHECK(some.count >= 1);
    CHECK(some.count <= all.count);
}

TEST_CASE("solver is deterministic") {
    Region r;
    r.width = 4;
    r.height = 3;
    const auto& t = catalogue("T1");
    auto a = solve(t, r);
    auto b = solve(t, r);
    REQUIRE(a.status == Status::Sat);
    CHECK(a.nodes == b.nodes);
    for (const auto& [c, pt] : a.witnesses[0].cells) {
        CHECK(canonical_name(pt.tile) == canonical_name(b.witnesses[0].cells.at(c).tile));
        CHECK(pt.pose == b.witnesses[0].cells.at(c).pose);
    }
}

TEST_CASE("unsatisfiability is monotone in the region") {
    std::mt19937 rng(99);
    const auto& t1 = catalogue("T1");
    for (int trial = 0; trial < 8; ++trial) {
        auto sub = random_subset(t1, 4, rng);
        Region small;
        small.width = 2;
        small.height = 2;
        Region big = small;
        big.width = 3;
        big.height = 3;
        if (solve(sub, small).status == Status::Unsat) CHECK(solve(sub, big).status == Status::Unsat);
        if (solve(sub, big).status == Status::Sat) CHECK(solve(sub, small).status == Status::Sat);
    }
}

TEST_CASE("torus search") {
    CHECK(torus_search(catalogue("T1"), 3, 4).status == TorusStatus::NoneByParity);
    CHECK_THROWS_AS(
        [] {
            Region r;
            r.width = 3;
            r.height = 2;
            r.boundary = Boundary::Torus;
            solve(catalogue("T1"), r);
        }(),
        std::invalid_argument);

    std::vector<Tile> outward;
    for (const auto& tile : catalogue("T1").tiles())
        if (tile.role == Role::Outward) outward.push_back(tile);
    CHECK(torus_search(TileSet("outward", outward), 2, 2).status == TorusStatus::None);

    for (int p = 2; p <= 6; p += 2)
        for (int q = 2; q <= 6; q += 2) {
            auto res = torus_search(catalogue("T1"), p, q);
            INFO(p, "x", q);
            CHECK(res.status == TorusStatus::None);
        }
}

TEST_CASE("torus witnesses verify cyclically") {
    // One cornered and one plain tile whose sides pair with each other.
    const Tile some = catalogue("T1").tiles().front();
    EdgeMark m = some.edges[E];
    EdgeMark p = mark_partner(m);
    Edges e{m, m, p, p};
    TileSet surrogate("surrogate", {tile_from_edges(true, e), tile_from_edges(false, e)});
    auto res = torus_search(surrogate, 2, 2);
    REQUIRE(res.status == TorusStatus::Witness);
    const auto& w = *res.witness;
    CHECK(w.cells.size() == 4);
    MarkedPatch unrolled;
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) unrolled.cells[{x, y}] = w.cells.at({x % 2, y % 2});
    CHECK(verify_patch(surrogate, unrolled).empty());
    CHECK(torus_search(surrogate, 4, 6).status == TorusStatus::Witness);
}
