#include "domtile/synthesis.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace dt;

namespace {

// Pair tile [[3y|v]] together with its left partner.
std::vector<std::string> pair_names(const std::vector<std::string>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) {
        const int y = p[1] - '0';
        const std::string v = p.substr(3);
        out.push_back("[3" + std::string(1, p[1]) + "|" + v + "]");
        out.push_back("[-3" + std::string(1, char('0' + (y ^ 2))) + "|" + v + "]");
    }
    return out;
}

TileSet listed(const std::vector<std::string>& singles, const std::vector<std::string>& pairs) {
    return common_tiles()
        .united(tileset_from_names("", singles))
        .united(tileset_from_names("", pair_names(pairs)));
}

std::string admits(const TileSet& t) {
    std::string s;
    for (auto b : block_admissibility(t)) s += to_char(b);
    std::sort(s.begin(), s.end());
    return s;
}

Symbol random_full(std::mt19937& rng) {
    Symbol s;
    for (auto& d : s.digits) d = std::uint8_t(1 + rng() % 15);
    return s;
}

} // namespace

TEST_CASE("transcribed atomic and pair tables agree with the derivation") {
    CHECK(oracle_mismatches().empty());
    CHECK(derive_atomics().atomic.size() == 16);
    CHECK(derive_atomics().pairs.size() == 256);
}

TEST_CASE("atomic and pair set instances") {
    CHECK(atomic_tiles({1, 0}) == tileset_from_names("", {"[00|32]", "[13|02]", "[10|+]", "[11|+]", "[12|+]"}));
    CHECK(atomic_tiles({2, 2}) == tileset_from_names("", {"[12|33]", "[13|31]", "[10|23]", "[11|21]"}));
    CHECK(pair_tiles({3, 1}, {2, 0}) == tileset_from_names("", pair_names({"31|01"})));
    CHECK(pair_tiles({3, 1}, {1, 1}) == tileset_from_names("", pair_names({"30|13"})));
}

TEST_CASE("synthesized sets for 1023 match the worked listing") {
    auto expect = listed(
        {"[13|00]", "[00|30]", "[10|+]", "[11|+]", "[12|+]", "[00|32]", "[13|02]", "[12|33]", "[13|31]",
         "[10|23]", "[11|21]", "[11|11]", "[10|13]", "[13|+]"},
        {"33|12", "32|+", "31|23", "31|33", "33|10", "30|+", "31|13", "32|01"});
    auto got = synthesize(parse_symbol("1023"));
    CHECK(got.size() == 65);
    CHECK(got == expect);
}

TEST_CASE("synthesized set for 1101 has the listed size and the table-derived members") {
    auto got = synthesize(parse_symbol("1101"));
    CHECK(got.size() == 67);
    for (auto n : {"[01|32]", "[12|02]", "[31|22]", "[31|32]", "[30|02]"}) CHECK(got.contains(std::string(n)));
    for (auto n : {"[13|00]", "[10|33]", "[13|11]", "[30|23]", "[31|10]", "[30|13]"}) CHECK(got.contains(std::string(n)));
}

TEST_CASE("shift law over all deterministic symbols and random full symbols") {
    for (const auto& s : deterministic_symbols()) CHECK(shift_law_check(s));
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) CHECK(shift_law_check(random_full(rng)));
    CHECK(synthesize(parse_symbol("(0123)(0123)(0123)(0123)")).size() > synthesize(parse_symbol("1023")).size());
}

TEST_CASE("synthesis is monotone and the union of its deterministic components") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        Symbol a = random_full(rng);
        Symbol b = a;
        for (auto& d : b.digits) d = std::uint8_t(d | (1u << (rng() % 4)));
        auto ta = synthesize(a);
        CHECK(ta.subset_of(synthesize(b)));

        TileSet u = common_tiles();
        for (const auto& c : det_components(a)) u = u.united(synthesize(c));
        CHECK(u == ta);
    }
}

TEST_CASE("atomic sets at one slot overlap only in plain vertical tiles") {
    for (int slot = 0; slot < 4; ++slot)
        for (Code a = 0; a < 4; ++a)
            for (Code b = a + 1; b < 4; ++b) {
                auto x = atomic_tiles({slot, a});
                auto y = atomic_tiles({slot, b});
                for (const auto& n : x.minus(x.minus(y)).names()) CHECK(n.ends_with("|+]"));
            }
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            if (i == j) continue;
            const auto& x = atomic_tiles({i / 4, Code(i % 4)});
            const auto& y = atomic_tiles({j / 4, Code(j % 4)});
            CHECK_FALSE(x.minus(y).empty());
        }
}

TEST_CASE("theorem sets admit exactly their blocks") {
    auto rows = theorem1_sets();
    CHECK(rows.size() == 9);
    for (const auto& r : rows) {
        INFO(r.name);
        CHECK(admits(r.tiles) == r.admits);
    }
}

TEST_CASE("every synthesized tile occurs in a level-3 marked hierarchy") {
    CHECK(usage_check(parse_symbol("1101"), 3).empty());
    CHECK(usage_check(parse_symbol("1023"), 3).empty());
    for (const auto& s : deterministic_symbols()) CHECK(t2_closure(s) == synthesize(s));
}
