// Acceptance run: one line per criterion, nonzero exit when any fails.

#include "domtile/substitution.hpp"
#include "domtile/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace dt;

namespace {

constexpr double kCensusSeconds = 5.0;
constexpr double kTorusSeconds = 600.0;
constexpr int kMirrorSamples = 100;
constexpr int kDistinctSamples = 50;
constexpr int kRoundTripSamples = 20;
constexpr int kRandomFullShift = 500;
constexpr int kSolverSubsets = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& f) {
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
}

std::vector<std::string> pair_names(const std::vector<std::string>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) {
        const int y = p[1] - '0';
        out.push_back("[3" + std::string(1, p[1]) + "|" + p.substr(3) + "]");
        out.push_back("[-3" + std::string(1, char('0' + (y ^ 2))) + "|" + p.substr(3) + "]");
    }
    return out;
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

// Product-space enumeration with direct mark and vertex checks.
std::uint64_t naive_count(const TileSet& t, int w, int h) {
    struct Opt {
        Edges e;
        bool cornered;
    };
    std::vector<Opt> opts;
    for (const auto& tile : t.tiles())
        for (const auto& [g, e] : placements(tile)) opts.push_back({e, tile.cornered});
    std::vector<int> at(w * h, -1);
    std::uint64_t n = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == w * h) {
            ++n;
            return;
        }
        const int x = i % w, y = i / w;
        for (int k = 0; k < int(opts.size()); ++k) {
            const auto& o = opts[k];
            if (x > 0 && !mark_matches(opts[at[i - 1]].e[E], o.e[W])) continue;
            if (y > 0 && !mark_matches(opts[at[i - w]].e[N], o.e[S])) continue;
            if (x > 0 && y > 0) {
                int c = o.cornered + opts[at[i - 1]].cornered + opts[at[i - w]].cornered + opts[at[i - w - 1]].cornered;
                if (c != 1) continue;
            }
            at[i] = k;
            rec(i + 1);
            at[i] = -1;
        }
    };
    rec(0);
    return n;
}

} // namespace

int main() {
    std::mt19937 rng(20240601);
    const auto dets = deterministic_symbols();

    report(1, "census exactness", [] {
        auto t0 = Clock::now();
        auto c = census();
        double dt = seconds_since(t0);
        std::ostringstream d;
        d << "full=" << c.full << " self_paired=" << c.self_paired << " classes=" << c.classes
          << " det=" << c.det_symbols << " det_classes=" << c.det_classes << " in " << dt << " s";
        bool ok = c.full == 50625 && c.self_paired == 135 && c.classes == 25380 && c.det_symbols == 256 &&
                  c.det_classes == 128 && dt < kCensusSeconds;
        return Outcome{ok, d.str()};
    });

    report(2, "T1 closures and admissibility tables", [] {
        std::vector<std::pair<Rule, std::string>> named = {
            {Rule::Pi, "T_Pi"}, {Rule::Par, "T_Par"}, {Rule::Xi, "T_Xi"}, {Rule::PiBar, "T_Pibar"}};
        std::vector<std::size_t> sizes = {16, 17, 18, 26};
        std::string bad;
        for (std::size_t i = 0; i < named.size(); ++i) {
            auto c = closure({named[i].first}).tiles;
            if (!(c == catalogue(named[i].second)) || c.size() != sizes[i]) bad += " " + named[i].second;
        }
        auto pb = catalogue("T1").minus(tileset_from_names("", {"[02]"}, Context::T1));
        if (!(closure({Rule::PiBar}).tiles == pb)) bad += " T_Pibar!=T1-[02]";
        int rows = 0;
        for (const auto& r : theorem1_sets()) {
            ++rows;
            std::string want = r.admits;
            std::sort(want.begin(), want.end());
            if (admits(r.tiles) != want) bad += " row " + r.name;
        }
        return Outcome{bad.empty() && rows == 9,
                       bad.empty() ? "4 closures exact, " + std::to_string(rows) + " admissibility rows"
                                   : "mismatch:" + bad};
    });

    report(3, "worked examples 1101 and 1023", [] {
        auto t1101 = synthesize(parse_symbol("1101"));
        auto t1023 = synthesize(parse_symbol("1023"));
        auto listed1023 =
            common_tiles()
                .united(tileset_from_names("", {"[13|00]", "[00|30]", "[10|+]", "[11|+]", "[12|+]", "[00|32]", "[13|02]",
                                                "[12|33]", "[13|31]", "[10|23]", "[11|21]", "[11|11]", "[10|13]",
                                                "[13|+]"}))
                .united(tileset_from_names(
                    "", pair_names({"33|12", "32|+", "31|23", "31|33", "33|10", "30|+", "31|13", "32|01"})));
        // The 1101 listing differs from its own generic tables in seven tiles;
        // the derivation sides with the tables.
        auto listed1101 =
            common_tiles()
                .united(tileset_from_names("", {"[13|00]", "[00|30]", "[10|+]", "[11|+]", "[12|+]", "[11|32]", "[12|02]",
                                                "[13|+]", "[10|33]", "[11|31]", "[12|23]", "[13|21]", "[13|11]",
                                                "[12|13]"}))
                .united(tileset_from_names("", pair_names({"31|21", "31|31", "31|33", "30|23", "31|+", "30|+", "31|10",
                                                           "30|01", "30|13", "31|01"})));
        auto expected_diff =
            tileset_from_names("", {"[-32|01]", "[-33|21]", "[-33|31]", "[11|32]", "[30|01]", "[31|21]", "[31|31]"});
        bool ok = t1101.size() == 67 && t1023.size() == 65 && t1023 == listed1023 &&
                  listed1101.minus(t1101) == expected_diff && t1101.minus(listed1101).size() == 7;
        std::ostringstream d;
        d << "|T_1101|=" << t1101.size() << " |T_1023|=" << t1023.size() << ", 1023 listing exact, 1101 listing "
          << "differs in " << listed1101.minus(t1101).size() << " logged tiles";
        return Outcome{ok, d.str()};
    });

    report(4, "oracle equivalence", [] {
        auto m = oracle_mismatches();
        const auto& d = derive_atomics();
        bool ok = m.empty() && d.atomic.size() == 16 && d.pairs.size() == 256;
        return Outcome{ok, std::to_string(d.atomic.size()) + " atomic + " + std::to_string(d.pairs.size()) +
                               " pair sets, " + std::to_string(m.size()) + " mismatches" +
                               (m.empty() ? "" : " first: " + m.front())};
    });

    report(5, "shift law", [&] {
        int bad = 0;
        for (const auto& s : dets) bad += !shift_law_check(s);
        for (int i = 0; i < kRandomFullShift; ++i) bad += !shift_law_check(random_full(rng));
        return Outcome{bad == 0, std::to_string(dets.size()) + " deterministic + " + std::to_string(kRandomFullShift) +
                                     " random full, " + std::to_string(bad) + " failures"};
    });

    report(6, "mirror law", [&] {
        int bad = 0, checks = 0;
        for (int i = 0; i < kMirrorSamples; ++i) {
            auto s = dets[rng() % dets.size()];
            for (int n = 0; n <= 3; ++n, ++checks)
                bad += !congruent(flip_v_relabel(expand(s, n)), expand(partner(s), n));
        }
        return Outcome{bad == 0, std::to_string(checks) + " checks, " + std::to_string(bad) + " failures"};
    });

    report(7, "distinctness at level 3", [&] {
        int bad = 0, n = 0;
        while (n < kDistinctSamples) {
            auto a = dets[rng() % dets.size()], b = dets[rng() % dets.size()];
            if (equivalent(a, b)) continue;
            ++n;
            bad += hier_equiv_check(a, b, 3);
        }
        return Outcome{bad == 0, std::to_string(n) + " inequivalent pairs, " + std::to_string(bad) + " coincide"};
    });

    report(8, "non-unique decomposition", [] {
        std::ostringstream d;
        bool ok = true;
        int members = 0, via1 = 0, via3 = 0;
        for (const auto& s : deterministic_symbols()) {
            auto cls = prop2_classify(s);
            if (cls == Prop2Class::NotApplicable) continue;
            ++members;
            if (cls == Prop2Class::PeriodicNonunique) {
                if (periodicity_scan(expand(s, 3)).empty()) {
                    ok = false;
                    d << " " << format_symbol(s) << ":no-period";
                }
                continue;
            }
            // S' is S+1 or S+3; the two are equivalent, and one of them carries the
            // alternative hierarchy in this frame convention.
            auto fails = [&](int k) {
                auto s1 = symbol_shift(s, k);
                std::ostringstream why;
                for (int n = 2; n <= 4; ++n) {
                    auto ha = square_halves(expand(s, n));
                    auto hb = square_halves(expand(s1, n));
                    const CongruenceOptions o{true, true, true, false};
                    bool same = (congruent(ha[0], hb[0], o) && congruent(ha[1], hb[1], o)) ||
                                (congruent(ha[0], hb[1], o) && congruent(ha[1], hb[0], o));
                    if (!same) why << "/n" << n << ":halves-differ";
                    for (const auto& h : ha) {
                        auto c = decompositions(h, {s, s1}).size();
                        if (c != 2) {
                            why << "/n" << n << ":" << c << "-parses";
                            break;
                        }
                    }
                }
                return why.str();
            };
            auto f1 = fails(1), f3 = fails(3);
            if (f1.empty()) {
                ++via1;
            } else if (f3.empty()) {
                ++via3;
            } else {
                ok = false;
                d << " " << format_symbol(s) << " +1" << f1 << " +3" << f3;
            }
        }
        std::ostringstream head;
        head << members << " family members, " << via1 << " via S+1, " << via3 << " via S+3";
        return Outcome{ok, head.str() + (ok ? ", halves coincide, exactly 2 parses at n=2..4" : ";" + d.str())};
    });

    report(9, "deflate round trip", [&] {
        int bad = 0, checks = 0;
        for (int i = 0; i < kRoundTripSamples; ++i) {
            auto s = dets[rng() % dets.size()];
            for (int n = 1; n <= 4; ++n, ++checks) {
                auto d = deflate(expand(s, n), s);
                bad += !(d && *d == expand(s, n - 1));
            }
        }
        return Outcome{bad == 0, std::to_string(checks) + " round trips, " + std::to_string(bad) + " failures"};
    });

    report(10, "supertile admissibility", [&] {
        std::vector<SupertileContext> ctxs;
        for (const auto& r : theorem1_sets()) ctxs.push_back(SupertileContext::of(r.rules));
        for (auto s : {"1101", "1023", "0011", "0000"}) ctxs.push_back(SupertileContext::of(parse_symbol(s)));
        for (int i = 0; i < 4; ++i) ctxs.push_back(SupertileContext::of(dets[rng() % dets.size()]));
        int patches = 0, violations = 0;
        std::string bad;
        for (const auto& c : ctxs)
            for (int level = 1; level <= 2; ++level) {
                auto st = build_marked_supertile(c, level);
                auto v = verify_patch(st.tiles, st.patch);
                ++patches;
                violations += int(v.size());
                if (!v.empty()) bad += " " + c.label() + "/" + std::to_string(level);
            }
        return Outcome{violations == 0, std::to_string(patches) + " patches, " + std::to_string(violations) +
                                            " violations" + bad};
    });

    report(11, "aperiodicity falsification for 1101", [] {
        auto t = synthesize(parse_symbol("1101"));
        auto t0 = Clock::now();
        std::ostringstream d;
        bool ok = true;
        int none = 0;
        for (int p = 2; p <= 8; p += 2)
            for (int q = 2; q <= 8; q += 2) {
                auto r = torus_search(t, p, q);
                if (r.status == TorusStatus::Witness) {
                    ok = false;
                    d << " witness at " << p << "x" << q;
                } else if (r.status == TorusStatus::Timeout && p <= 6 && q <= 6) {
                    ok = false;
                    d << " timeout at " << p << "x" << q;
                } else if (r.status == TorusStatus::None) {
                    ++none;
                } else {
                    d << " " << to_string(r.status) << " at " << p << "x" << q;
                }
            }
        double dt = seconds_since(t0);
        if (dt > kTorusSeconds) ok = false;
        d << " " << none << "/16 tori NONE";
        return Outcome{ok, d.str()};
    });

    report(12, "solver against brute force", [&] {
        const auto& t1 = catalogue("T1");
        auto all = t1.tiles();
        int bad = 0, checks = 0;
        std::ostringstream d;
        for (int i = 0; i < kSolverSubsets; ++i) {
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<Tile> sub(all.begin(), all.begin() + 6 + int(rng() % 8));
            TileSet ts("subset", sub);
            for (auto [w, h] : {std::pair{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
                ++checks;
                auto c = count_tilings(ts, w, h);
                auto n = naive_count(ts, w, h);
                if (!c || *c != n) {
                    ++bad;
                    d << " " << w << "x" << h << "(" << (c ? std::to_string(*c) : "timeout") << " vs " << n << ")";
                }
            }
        }
        return Outcome{bad == 0, std::to_string(checks) + " regions, " + std::to_string(bad) + " disagreements" + d.str()};
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
