#include "domtile/patch.hpp"

#include <algorithm>
#include <stdexcept>

namespace dt {

std::array<int, 4> MarkedPatch::bbox() const {
    if (cells.empty()) return {0, 0, 0, 0};
    std::array<int, 4> b{cells.begin()->first.first, cells.begin()->first.second, 0, 0};
    b[2] = b[0] + 1;
    b[3] = b[1] + 1;
    for (const auto& [c, _] : cells) {
        b[0] = std::min(b[0], c.first);
        b[1] = std::min(b[1], c.second);
        b[2] = std::max(b[2], c.first + 1);
        b[3] = std::max(b[3], c.second + 1);
    }
    return b;
}

std::string to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::Membership: return "MEMBERSHIP";
    case ViolationKind::Edge: return "EDGE";
    case ViolationKind::Vertex: return "VERTEX";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
    case Status::Sat: return "SAT";
    case Status::Unsat: return "UNSAT";
    case Status::Timeout: return "TIMEOUT";
    }
    return "?";
}

std::string to_string(TorusStatus s) {
    switch (s) {
    case TorusStatus::Witness: return "WITNESS";
    case TorusStatus::None: return "NONE";
    case TorusStatus::NoneByParity: return "NONE-BY-PARITY";
    case TorusStatus::Timeout: return "TIMEOUT";
    }
    return "?";
}

namespace {

bool edges_match(const EdgeMark& a, const EdgeMark& b) {
    if (a.context() != b.context()) return false;
    return mark_matches(a, b);
}

} // namespace

std::vector<Violation> verify_patch(const TileSet& t, const MarkedPatch& p) {
    std::vector<Violation> out;
    auto at = [&](int x, int y) -> const PlacedTile* {
        auto it = p.cells.find({x, y});
        return it == p.cells.end() ? nullptr : &it->second;
    };
    for (const auto& [c, pt] : p.cells) {
        if (!t.contains(pt.tile)) out.push_back({ViolationKind::Membership, c, canonical_name(pt.tile)});
        Edges e = pt.edges();
        if (auto* east = at(c.first + 1, c.second))
            if (!edges_match(e[E], east->edges()[W]))
                out.push_back({ViolationKind::Edge, c,
                               "E " + format_mark(e[E]) + " vs " + format_mark(east->edges()[W])});
        if (auto* north = at(c.first, c.second + 1))
            if (!edges_match(e[N], north->edges()[S]))
                out.push_back({ViolationKind::Edge, c,
                               "N " + format_mark(e[N]) + " vs " + format_mark(north->edges()[S])});
        const PlacedTile* quad[4] = {&pt, at(c.first + 1, c.second), at(c.first, c.second + 1),
                                     at(c.first + 1, c.second + 1)};
        if (quad[1] && quad[2] && quad[3]) {
            int k = 0;
            for (auto* q : quad) k += q->tile.cornered;
            if (k != 1) out.push_back({ViolationKind::Vertex, c, std::to_string(k) + " cornered tiles"});
        }
    }
    return out;
}

namespace {

struct Placement {
    int tile;
    Pose pose;
    std::array<int, 4> e;
    bool cornered;
};

using Bits = std::vector<std::uint64_t>;

class Solver {
public:
    Solver(const TileSet& t, const Region& r, Mode mode, std::uint64_t budget,
           const std::function<bool(const MarkedPatch&)>& cb, bool corner_origin)
        : r_(r), mode_(mode), budget_(budget), cb_(cb), tiles_(t.tiles()) {
        if (r.width < 1 || r.height < 1) throw std::invalid_argument("region must have at least one cell");
        if (r.boundary == Boundary::Torus && (r.width % 2 || r.height % 2))
            throw std::invalid_argument("torus dimensions must be even");
        for (int i = 0; i < EdgeMark::kCount; ++i) partner_[i] = mark_partner(EdgeMark::from_id(i)).id();
        for (int i = 0; i < int(tiles_.size()); ++i)
            for (const auto& [g, e] : placements(tiles_[i])) add_placement(i, g, e);
        int free_count = int(pl_.size());
        std::map<int, int> preset;
        for (const auto& [c, pt] : r.preset) {
            if (c.first < 0 || c.second < 0 || c.first >= r.width || c.second >= r.height)
                throw std::invalid_argument("preset cell outside region");
            tiles_.push_back(pt.tile);
            add_placement(int(tiles_.size()) - 1, pt.pose, pt.edges());
            preset[index(c.first, c.second)] = int(pl_.size()) - 1;
        }
        words_ = (pl_.size() + 63) / 64;
        for (int s = 0; s < 4; ++s) by_side_[s].assign(EdgeMark::kCount, Bits(words_, 0));
        cornered_.assign(words_, 0);
        for (int i = 0; i < int(pl_.size()); ++i) {
            for (int s = 0; s < 4; ++s) set(by_side_[s][pl_[i].e[s]], i);
            if (pl_[i].cornered) set(cornered_, i);
        }
        cells_ = r.width * r.height;
        Bits all(words_, 0);
        for (int i = 0; i < free_count; ++i) set(all, i);
        dom_.assign(cells_, all);
        for (const auto& [c, p] : preset) {
            dom_[c].assign(words_, 0);
            set(dom_[c], p);
        }
        for (const auto& [c, ts] : r.allowed) {
            if (c.first < 0 || c.second < 0 || c.first >= r.width || c.second >= r.height)
                throw std::invalid_argument("restricted cell outside region");
            Bits ok(words_, 0);
            for (int i = 0; i < int(pl_.size()); ++i)
                if (i >= free_count || ts.contains(tiles_[pl_[i].tile])) set(ok, i);
            and_into(dom_[index(c.first, c.second)], ok);
        }
        if (corner_origin) and_into(dom_[0], cornered_);
        build_neighbours();
    }

    SolveResult run() {
        std::vector<int> queue(cells_);
        for (int c = 0; c < cells_; ++c) queue[c] = c;
        if (boundary_prune() && propagate(queue)) search();
        if (timed_out_) res_.status = Status::Timeout;
        else res_.status = res_.count > 0 ? Status::Sat : Status::Unsat;
        return res_;
    }

private:
    const Region& r_;
    Mode mode_;
    std::uint64_t budget_;
    const std::function<bool(const MarkedPatch&)>& cb_;
    std::vector<Tile> tiles_;
    std::vector<Placement> pl_;
    std::size_t words_ = 0;
    int cells_ = 0;
    std::array<int, EdgeMark::kCount> partner_{};
    std::array<std::vector<Bits>, 4> by_side_;
    Bits cornered_;
    std::vector<Bits> dom_;
    std::vector<std::array<int, 4>> nb_;           // neighbour per side or -1
    std::vector<std::array<int, 4>> windows_;      // cells of each vertex window
    std::vector<std::vector<int>> cell_windows_;
    SolveResult res_;
    bool timed_out_ = false;
    bool stopped_ = false;

    static void set(Bits& b, int i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }
    static void and_into(Bits& a, const Bits& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
    }
    static bool none(const Bits& b) {
        for (auto w : b)
            if (w) return false;
        return true;
    }
    static int popcount(const Bits& b) {
        int n = 0;
        for (auto w : b) n += __builtin_popcountll(w);
        return n;
    }
    bool subset(const Bits& a, const Bits& b) const {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] & ~b[i]) return false;
        return true;
    }
    bool meets(const Bits& a, const Bits& b) const {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] & b[i]) return true;
        return false;
    }

    void add_placement(int tile, Pose g, const Edges& e) {
        Placement p{tile, g, {}, tiles_[tile].cornered};
        for (int s = 0; s < 4; ++s) p.e[s] = e[s].id();
        pl_.push_back(p);
    }

    int index(int x, int y) const { return y * r_.width + x; }

    void build_neighbours() {
        static const int dx[4] = {0, 1, 0, -1}, dy[4] = {1, 0, -1, 0};
        bool torus = r_.boundary == Boundary::Torus;
        nb_.assign(cells_, {-1, -1, -1, -1});
        cell_windows_.assign(cells_, {});
        for (int y = 0; y < r_.height; ++y)
            for (int x = 0; x < r_.width; ++x)
                for (int s = 0; s < 4; ++s) {
                    int nx = x + dx[s], ny = y + dy[s];
                    if (torus) {
                        nx = (nx + r_.width) % r_.width;
                        ny = (ny + r_.height) % r_.height;
                    } else if (nx < 0 || ny < 0 || nx >= r_.width || ny >= r_.height) {
                        continue;
                    }
                    nb_[index(x, y)][s] = index(nx, ny);
                }
        int wx = torus ? r_.width : r_.width - 1, wy = torus ? r_.height : r_.height - 1;
        for (int y = 0; y < wy; ++y)
            for (int x = 0; x < wx; ++x) {
                int x1 = (x + 1) % r_.width, y1 = (y + 1) % r_.height;
                std::array<int, 4> w{index(x, y), index(x1, y), index(x, y1), index(x1, y1)};
                for (int c : w) cell_windows_[c].push_back(int(windows_.size()));
                windows_.push_back(w);
            }
    }

    // Applies Fixed boundary marks once.
    bool boundary_prune() {
        if (r_.boundary != Boundary::Fixed) return true;
        for (int y = 0; y < r_.height; ++y)
            for (int x = 0; x < r_.width; ++x)
                for (int s = 0; s < 4; ++s) {
                    if (nb_[index(x, y)][s] >= 0) continue;
                    const auto& side = r_.outside[s];
                    int k = (s == N || s == S) ? x : y;
                    if (k < int(side.size()) && side[k]) {
                        auto& d = dom_[index(x, y)];
                        and_into(d, by_side_[s][partner_[side[k]->id()]]);
                        if (none(d)) return false;
                    }
                }
        return true;
    }

    bool revise_edges(int c, std::vector<int>& queue) {
        for (int s = 0; s < 4; ++s) {
            int n = nb_[c][s];
            if (n < 0) continue;
            int o = (s + 2) % 4;
            Bits allowed(words_, 0);
            std::array<bool, EdgeMark::kCount> seen{};
            const auto& d = dom_[c];
            for (std::size_t w = 0; w < words_; ++w)
                for (auto bits = d[w]; bits; bits &= bits - 1) {
                    int p = int(w * 64 + __builtin_ctzll(bits));
                    int m = partner_[pl_[p].e[s]];
                    if (seen[m]) continue;
                    seen[m] = true;
                    const auto& b = by_side_[o][m];
                    for (std::size_t i = 0; i < words_; ++i) allowed[i] |= b[i];
                }
            auto& dn = dom_[n];
            bool changed = false;
            for (std::size_t i = 0; i < words_; ++i) {
                auto v = dn[i] & allowed[i];
                if (v != dn[i]) {
                    dn[i] = v;
                    changed = true;
                }
            }
            if (changed) {
                if (none(dn)) return false;
                queue.push_back(n);
            }
        }
        return true;
    }

    bool revise_windows(int c, std::vector<int>& queue) {
        for (int w : cell_windows_[c]) {
            const auto& cs = windows_[w];
            int sure = 0, maybe = 0, last_maybe = -1;
            for (int x : cs) {
                bool can = meets(dom_[x], cornered_);
                bool must = can && subset(dom_[x], cornered_);
                sure += must;
                if (can) {
                    ++maybe;
                    last_maybe = x;
                }
            }
            if (sure > 1 || maybe == 0) return false;
            if (sure == 1) {
                for (int x : cs) {
                    if (subset(dom_[x], cornered_)) continue;
                    if (!meets(dom_[x], cornered_)) continue;
                    for (std::size_t i = 0; i < words_; ++i) dom_[x][i] &= ~cornered_[i];
                    if (none(dom_[x])) return false;
                    queue.push_back(x);
                }
            } else if (maybe == 1) {
                auto& d = dom_[last_maybe];
                and_into(d, cornered_);
                if (none(d)) return false;
                queue.push_back(last_maybe);
            }
        }
        return true;
    }

    bool propagate(std::vector<int>& queue) {
        std::vector<char> queued(cells_, 0);
        std::vector<int> work;
        for (int c : queue)
            if (!queued[c]) {
                queued[c] = 1;
                work.push_back(c);
            }
        std::vector<int> added;
        while (!work.empty()) {
            int c = work.back();
            work.pop_back();
            queued[c] = 0;
            added.clear();
            if (!revise_edges(c, added) || !revise_windows(c, added)) return false;
            for (int n : added)
                if (!queued[n]) {
                    queued[n] = 1;
                    work.push_back(n);
                }
        }
        return true;
    }

    MarkedPatch snapshot() const {
        MarkedPatch p;
        for (int y = 0; y < r_.height; ++y)
            for (int x = 0; x < r_.width; ++x) {
                const auto& d = dom_[index(x, y)];
                int pi = 0;
                for (std::size_t w = 0; w < words_; ++w)
                    if (d[w]) {
                        pi = int(w * 64 + __builtin_ctzll(d[w]));
                        break;
                    }
                const auto& pl = pl_[pi];
                p.cells[{x, y}] = {tiles_[pl.tile], pl.pose};
            }
        return p;
    }

    void search() {
        if (stopped_) return;
        int best = -1, best_size = 0;
        for (int c = 0; c < cells_; ++c) {
            int k = popcount(dom_[c]);
            if (k > 1 && (best < 0 || k < best_size)) {
                best = c;
                best_size = k;
            }
        }
        if (best < 0) {
            ++res_.count;
            if (mode_ == Mode::First) {
                res_.witnesses.push_back(snapshot());
                stopped_ = true;
            } else if (mode_ == Mode::All) {
                if (cb_) {
                    if (!cb_(snapshot())) stopped_ = true;
                } else {
                    res_.witnesses.push_back(snapshot());
                }
            }
            return;
        }
        Bits options = dom_[best];
        for (std::size_t w = 0; w < words_ && !stopped_; ++w)
            for (auto bits = options[w]; bits && !stopped_; bits &= bits - 1) {
                int p = int(w * 64 + __builtin_ctzll(bits));
                if (++res_.nodes > budget_) {
                    timed_out_ = stopped_ = true;
                    return;
                }
                auto saved = dom_;
                dom_[best].assign(words_, 0);
                set(dom_[best], p);
                std::vector<int> q{best};
                if (propagate(q)) search();
                dom_ = std::move(saved);
            }
    }
};

SolveResult run_solver(const TileSet& t, const Region& r, Mode mode, std::uint64_t budget,
                       const std::function<bool(const MarkedPatch&)>& cb, bool corner_origin) {
    if (t.empty() && r.preset.size() < std::size_t(r.width) * r.height) {
        if (r.width < 1 || r.height < 1) throw std::invalid_argument("region must have at least one cell");
        return {};
    }
    Solver s(t, r, mode, budget, cb, corner_origin);
    return s.run();
}

} // namespace

SolveResult solve(const TileSet& t, const Region& r, Mode mode, std::uint64_t budget,
                  const std::function<bool(const MarkedPatch&)>& on_tiling) {
    return run_solver(t, r, mode, budget, on_tiling, false);
}

TorusResult torus_search(const TileSet& t, int p, int q, std::uint64_t budget) {
    if (p <= 0 || q <= 0 || p % 2 || q % 2) return {TorusStatus::NoneByParity, std::nullopt, 0};
    Region r;
    r.width = p;
    r.height = q;
    r.boundary = Boundary::Torus;
    // Every torus tiling has a translate with a cornered tile at the origin.
    auto res = run_solver(t, r, Mode::First, budget, {}, true);
    switch (res.status) {
    case Status::Sat: return {TorusStatus::Witness, res.witnesses.front(), res.nodes};
    case Status::Unsat: return {TorusStatus::None, std::nullopt, res.nodes};
    default: return {TorusStatus::Timeout, std::nullopt, res.nodes};
    }
}

std::optional<std::uint64_t> count_tilings(const TileSet& t, int width, int height, std::uint64_t budget) {
    Region r;
    r.width = width;
    r.height = height;
    auto res = solve(t, r, Mode::Count, budget);
    if (res.status == Status::Timeout) return std::nullopt;
    return res.count;
}

} // namespace dt
