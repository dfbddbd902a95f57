#include "domtile/tiles.hpp"

#include <doctest.h>

using namespace dt;

TEST_CASE("mark ids round-trip") {
    for (int i = 0; i < EdgeMark::kCount; ++i) CHECK(EdgeMark::from_id(i).id() == i);
}

TEST_CASE("mark parsing") {
    CHECK(format_mark(parse_mark("+-3")) == "+-3");
    CHECK(!parse_mark("+-3").d);
    CHECK(parse_mark("+", Context::T2).d == Code(0));
    CHECK(!parse_mark("+", Context::T1).d);
    CHECK_THROWS_AS(parse_mark("+x1"), ParseError);
    CHECK_THROWS_AS(parse_mark("+-4"), ParseError);
    CHECK_THROWS_AS(parse_mark("+-12x"), ParseError);
    CHECK_THROWS_AS(mark_matches(parse_mark("+", Context::T1), parse_mark("-", Context::T2)), ContextError);
}

TEST_CASE("partner matches and is an involution") {
    for (int i = 0; i < EdgeMark::kCount; ++i) {
        auto m = EdgeMark::from_id(i);
        CHECK(mark_matches(m, mark_partner(m)));
        CHECK(mark_partner(mark_partner(m)) == m);
        int hits = 0;
        for (int j = 0; j < EdgeMark::kCount; ++j) {
            auto n = EdgeMark::from_id(j);
            if (n.context() == m.context() && mark_matches(m, n)) ++hits;
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("pose group") {
    for (Pose g = 0; g < kPoses; ++g) {
        CHECK(pose_compose(g, pose_inverse(g)) == 0);
        for (Pose h = 0; h < kPoses; ++h) {
            Edges e = make_outward(1, false, Code(2)).edges;
            CHECK(apply_pose(apply_pose(e, h), g) == apply_pose(e, pose_compose(g, h)));
        }
    }
}

TEST_CASE("catalogue sizes") {
    CHECK(catalogue("T1").size() == 27);
    CHECK(catalogue("T+").size() == 4);
    CHECK(catalogue("Thv").size() == 23);
    CHECK(catalogue("K1").size() == 6);
    CHECK(catalogue("T+2").size() == 16);
    CHECK(catalogue("K2").size() == 40);
    CHECK(catalogue("U2").size() == 155);
    CHECK(catalogue("T0").size() == 19);
    CHECK(catalogue("T2").size() == 211);
    CHECK(catalogue("T_Pi").size() == 16);
    CHECK(catalogue("T_Par").size() == 17);
    CHECK(catalogue("T_Xi").size() == 18);
    CHECK(catalogue("T_Pibar").size() == 26);
}

TEST_CASE("aliases") {
    CHECK(congruent(tile_from_name("[30]", Context::T1), tile_from_name("[31]", Context::T1)) == false);
    CHECK(congruent(tile_from_name("[30|+]"), tile_from_name("[31|+]")));
    CHECK(congruent(tile_from_name("[00|+]"), tile_from_name("[02|+]")));
    CHECK(congruent(tile_from_name("[33|+]"), tile_from_name("[32|+]")));
    CHECK(tile_from_name("[31|+]").name == "[30|+]");
}

TEST_CASE("forgetting the framing of K2") {
    TileSet f("f");
    for (const auto& t : catalogue("K2").tiles()) f.insert(forget_d(t));
    CHECK(f == catalogue("K1").minus(tileset_from_names("", {"[02]"}, Context::T1)));
}

TEST_CASE("names round-trip") {
    for (const auto& n : catalogue_names())
        for (const auto& t : catalogue(n).tiles()) {
            CHECK(t.name != "?");
            CHECK(tile_from_name(t.name, t.context()).key() == t.key());
        }
}

TEST_CASE("shift action on catalogues") {
    CHECK(tile_shift(tile_from_name("[13|00]"), 2).name == "[11|02]");
    for (Code k = 0; k < 4; ++k) {
        CHECK(tileset_shift(catalogue("T+2"), k) == catalogue("T+2"));
        CHECK(tileset_shift(tileset_shift(catalogue("T2"), k), k) == catalogue("T2"));
    }
    for (const char* n : {"K2", "U2", "T0", "T2"}) CHECK(tileset_shift(catalogue(n), 2) == catalogue(n));
    // Odd shifts move the vertical framing of key tiles off the J/H/U quarters.
    CHECK_FALSE(tileset_shift(catalogue("K2"), 1) == catalogue("K2"));
}
