#include "domtile/synthesis.hpp"
#include "domtile/fixtures.hpp"

#include <json.hpp>

#include <set>

namespace dt {

namespace {

using nlohmann::json;

const char* kSlots = "stuv";

std::string instantiate(const std::string& tpl, Code d) {
    std::string s;
    for (char c : tpl) {
        switch (c) {
        case 'd': s += char('0' + d); break;
        case 'b': s += char('0' + nim_add(d, 1)); break;
        case 'q': s += char('0' + nim_add(d, 2)); break;
        case 'p': s += char('0' + nim_add(d, 3)); break;
        default: s += c;
        }
    }
    return s;
}

TileSet pair_set(const std::string& name, Code y, const std::string& vertical) {
    std::string v = vertical == "+" ? "+" : vertical;
    return tileset_from_names(name, {"[3" + std::string(1, char('0' + y)) + "|" + v + "]",
                                     "[-3" + std::string(1, char('0' + nim_add(y, 2))) + "|" + v + "]"});
}

std::string describe(const TileSet& t) {
    std::string s = "{";
    for (const auto& n : t.names()) s += (s.size() > 1 ? " " : "") + n;
    return s + "}";
}

} // namespace

const AtomicTables& transcribed_atomics() {
    static const AtomicTables T = [] {
        AtomicTables t;
        json a = json::parse(fixture("atomic_generic"));
        json p = json::parse(fixture("pair_generic"));
        for (int slot = 0; slot < 4; ++slot) {
            std::string key(1, kSlots[slot]);
            for (Code d = 0; d < 4; ++d) {
                Atom at{slot, d};
                std::vector<std::string> names;
                for (const auto& tpl : a.at(key)) names.push_back(instantiate(tpl.get<std::string>(), d));
                t.atomic[at] = tileset_from_names("T_" + format_atom(at), names);
            }
        }
        for (int ps = 0; ps < 4; ++ps)
            for (Code e = 0; e < 4; ++e)
                for (int cs = 0; cs < 4; ++cs) {
                    std::string cell =
                        p.at(std::string(1, kSlots[ps])).at(std::string(1, char('0' + e))).at(std::string(1, kSlots[cs]));
                    for (Code d = 0; d < 4; ++d) {
                        Atom parent{ps, e}, child{cs, d};
                        Code y = cell[0] == 'd' ? d : nim_add(d, 1);
                        t.pairs[{parent, child}] =
                            pair_set("T_" + format_atom(parent) + "->" + format_atom(child), y, cell.substr(1));
                    }
                }
        return t;
    }();
    return T;
}

std::vector<std::string> oracle_mismatches() {
    const auto& fx = transcribed_atomics();
    const auto& dv = derive_atomics();
    std::vector<std::string> out;
    for (const auto& [a, ts] : fx.atomic) {
        auto it = dv.atomic.find(a);
        TileSet got = it == dv.atomic.end() ? TileSet{} : it->second;
        if (!(got == ts))
            out.push_back("T_" + format_atom(a) + ": fixture " + describe(ts) + " derived " + describe(got));
    }
    for (const auto& [k, ts] : fx.pairs) {
        auto it = dv.pairs.find(k);
        TileSet got = it == dv.pairs.end() ? TileSet{} : it->second;
        if (!(got == ts))
            out.push_back("T_" + format_atom(k.first) + "->" + format_atom(k.second) + ": fixture " + describe(ts) +
                          " derived " + describe(got));
    }
    if (dv.atomic.size() != fx.atomic.size() || dv.pairs.size() != fx.pairs.size())
        out.push_back("derived table sizes " + std::to_string(dv.atomic.size()) + "/" +
                      std::to_string(dv.pairs.size()));
    return out;
}

namespace {

void check_oracle() {
    static const bool ok = [] {
        auto m = oracle_mismatches();
        if (!m.empty()) throw TranscriptionError("transcribed tables disagree with the derivation: " + m.front());
        return true;
    }();
    (void)ok;
}

} // namespace

const TileSet& atomic_tiles(const Atom& a) {
    check_oracle();
    return transcribed_atomics().atomic.at(a);
}

const TileSet& pair_tiles(const Atom& parent, const Atom& child) {
    check_oracle();
    return transcribed_atomics().pairs.at({parent, child});
}

const TileSet& common_tiles() {
    static const TileSet t = catalogue("T+2").united(catalogue("T0"), "T+2 u T0");
    return t;
}

TileSet synthesize(const Symbol& s) {
    if (!is_full(s)) throw std::invalid_argument("synthesize needs a full symbol, got " + format_symbol(s));
    TileSet out = common_tiles();
    out.name = "T_" + format_symbol(s);
    std::set<Atom> singles;
    std::set<std::pair<Atom, Atom>> pairs;
    for (const auto& c : det_components(s)) {
        std::vector<Atom> as;
        for (const auto& a : atoms(c)) {
            auto [pos, d] = atomic_parts(a);
            as.push_back({pos, d});
        }
        for (const auto& a : as) {
            singles.insert(a);
            for (const auto& b : as) pairs.insert({b, a});
        }
    }
    for (const auto& a : singles) out = out.united(atomic_tiles(a), out.name);
    for (const auto& [b, a] : pairs) out = out.united(pair_tiles(b, a), out.name);
    return out;
}

bool shift_law_check(const Symbol& s) { return synthesize(partner(s)) == tileset_shift(synthesize(s), 2); }

std::vector<Theorem1Row> theorem1_sets() {
    const auto& pi = catalogue("T_Pi");
    const auto& par = catalogue("T_Par");
    const auto& xi = catalogue("T_Xi");
    const auto& pb = catalogue("T_Pibar");
    return {
        {"T_Pibar", pb, {Rule::PiBar}, "HJU"},
        {"T_Pi", pi, {Rule::Pi}, "IU"},
        {"T_Xi", xi, {Rule::Xi}, "HU"},
        {"T_Par", par, {Rule::Par}, "J"},
        {"T_Pi+T_Par", pi.united(par, "T_Pi+T_Par"), {Rule::Pi, Rule::Par}, "IJU"},
        {"T_Pi+T_Xi", pi.united(xi, "T_Pi+T_Xi"), {Rule::Pi, Rule::Xi}, "HIU"},
        {"T_Par+T_Xi", par.united(xi, "T_Par+T_Xi"), {Rule::Par, Rule::Xi}, "HJU"},
        {"T_Pi+T_Par+T_Xi", pi.united(par).united(xi, "T_Pi+T_Par+T_Xi"), {Rule::Pi, Rule::Par, Rule::Xi}, "HIJU"},
        {"T1", catalogue("T1"), {Rule::Pi, Rule::Par, Rule::Xi, Rule::PiBar}, "HIJU"},
    };
}

TileSet usage_check(const Symbol& s, int n) {
    if (!is_deterministic(s)) throw std::invalid_argument("usage_check needs a deterministic symbol");
    TileSet used = t2_closure(s, std::max(0, n - 1));
    TileSet out = synthesize(s).minus(used);
    out.name = "unused";
    return out;
}

} // namespace dt
