#include "domtile/symbols.hpp"

#include <doctest.h>

#include <chrono>
#include <random>
#include <set>
#include <string>

using namespace dt;

namespace {

// String-level oracle: partner computed on explicit digit lists.
std::string partner_text(const std::string& stuv_sets) {
    // input is four comma separated digit lists, e.g. "12,2,2,2"
    std::vector<std::string> f;
    std::string cur;
    for (char c : stuv_sets + ",") {
        if (c == ',') {
            f.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    auto x3 = [](const std::string& s) {
        std::set<char> out;
        for (char c : s) out.insert(char('0' + ((c - '0') ^ 3)));
        return std::string(out.begin(), out.end());
    };
    return x3(f[1]) + "," + x3(f[0]) + "," + x3(f[2]) + "," + x3(f[3]);
}

std::string mask_digits(int m) {
    std::string s;
    for (int d = 0; d < 4; ++d)
        if (m & (1 << d)) s += char('0' + d);
    return s;
}

} // namespace

TEST_CASE("symbol codec") {
    auto s = parse_symbol("(12)222");
    CHECK(s.s() == 0b0110);
    CHECK(s.t() == 0b0100);
    CHECK(format_symbol(s) == "(12)222");
    CHECK(format_symbol(parse_symbol(".320")) == ".320");
    CHECK(parse_symbol("****").digits == std::array<std::uint8_t, 4>{15, 15, 15, 15});
    CHECK(format_symbol(parse_symbol("(21)(0123)..")) == "(12)*..");
    CHECK_THROWS_AS(parse_symbol("012"), ParseError);
    CHECK_THROWS_AS(parse_symbol("01234"), ParseError);
    CHECK_THROWS_AS(parse_symbol("(4)000"), ParseError);
    CHECK_THROWS_AS(parse_symbol("(01000"), ParseError);
}

TEST_CASE("classification and decomposition") {
    CHECK(classify(parse_symbol("1101")) == SymbolClass::Deterministic);
    CHECK(classify(parse_symbol("(12)222")) == SymbolClass::Full);
    CHECK(classify(parse_symbol("0...")) == SymbolClass::Atomic);
    CHECK(classify(parse_symbol("0.1.")) == SymbolClass::Partial);
    CHECK(atoms(parse_symbol("(01)231")).size() == 5);
    CHECK(atoms(parse_symbol("....")).empty());
    auto a = atoms(parse_symbol("1101"));
    REQUIRE(a.size() == 4);
    CHECK(format_symbol(a[1]) == ".1..");
    auto dc = det_components(parse_symbol("(12)222"));
    REQUIRE(dc.size() == 2);
    CHECK(format_symbol(dc[0]) == "1222");
    CHECK(format_symbol(dc[1]) == "2222");
    CHECK(det_components(parse_symbol("****")).size() == 256);
    CHECK_THROWS(det_components(parse_symbol("0.11")));
}

TEST_CASE("shift and partner") {
    CHECK(format_symbol(symbol_shift(parse_symbol("0011"), 1)) == "1100");
    CHECK(format_symbol(symbol_shift(parse_symbol("0011"), 2)) == "2233");
    CHECK(equivalent(parse_symbol("0231"), parse_symbol("1302")));
    CHECK(equivalent(parse_symbol("1(02)3(012)"), parse_symbol("(13)20(123)")));
    CHECK(canonical_rep(parse_symbol("1302")) == canonical_rep(parse_symbol("0231")));
}

TEST_CASE("partner agrees with the string oracle on all full symbols") {
    for (int a = 1; a < 16; ++a)
        for (int b = 1; b < 16; ++b)
            for (int c = 1; c < 16; ++c)
                for (int d = 1; d < 16; d += 3) {
                    Symbol s;
                    s.digits = {std::uint8_t(a), std::uint8_t(b), std::uint8_t(c), std::uint8_t(d)};
                    Symbol p = partner(s);
                    std::string want = partner_text(mask_digits(a) + "," + mask_digits(b) + "," + mask_digits(c) + "," + mask_digits(d));
                    std::string got = mask_digits(p.s()) + "," + mask_digits(p.t()) + "," + mask_digits(p.u()) + "," + mask_digits(p.v());
                    CHECK(got == want);
                    CHECK(partner(p) == s);
                    for (Code k = 0; k < 4; ++k) {
                        CHECK(partner(symbol_shift(s, k)) == symbol_shift(p, k));
                        CHECK(symbol_shift(symbol_shift(s, k), k) == s);
                    }
                    CHECK(canonical_rep(canonical_rep(s)) == canonical_rep(s));
                }
}

TEST_CASE("census by enumeration") {
    auto t0 = std::chrono::steady_clock::now();
    Census c = census();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(c.full == 50625);
    CHECK(c.self_paired == 135);
    CHECK(c.classes == 25380);
    CHECK(c.det_symbols == 256);
    CHECK(c.det_classes == 128);
    CHECK((c.full - c.self_paired) / 2 + c.self_paired == c.classes);
    CHECK(secs < 5.0);
}

TEST_CASE("prop 2 classification") {
    CHECK(prop2_classify(parse_symbol("0011")) == Prop2Class::NonperiodicNonunique);
    CHECK(prop2_classify(parse_symbol("0000")) == Prop2Class::PeriodicNonunique);
    CHECK(prop2_classify(parse_symbol("0123")) == Prop2Class::NotApplicable);
    CHECK(prop2_classify(parse_symbol("(02)(02)11")) == Prop2Class::NonperiodicNonunique);
    CHECK(prop2_classify(parse_symbol("(01)(01)11")) == Prop2Class::NotApplicable);
    // s = t makes partner(S) = S + 3.
    for (const auto& orbit : prop2_orbits(false))
        for (const auto& s : orbit) CHECK(partner(s) == symbol_shift(s, 3));
}

TEST_CASE("prop 2 orbit tally") {
    auto all = prop2_orbits(false);
    auto distinct = prop2_orbits(true);
    int det_all = 0;
    for (const auto& o : all)
        if (is_deterministic(o.front())) ++det_all;
    CHECK(all.size() == 10);
    CHECK(det_all == 4);
    CHECK(distinct.size() == 8);
}
