#include "domtile/substitution.hpp"
#include "domtile/fixtures.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <memory>
#include <map>
#include <set>
#include <stdexcept>

namespace dt {

Iso Iso::operator*(const Iso& o) const {
    Iso r;
    r.m = {m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
           m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
    auto [x, y] = apply(o.tx, o.ty);
    r.tx = x;
    r.ty = y;
    return r;
}

Iso Iso::inverse() const {
    Iso r;
    // Orthogonal: inverse is the transpose.
    r.m = {m[0], m[2], m[1], m[3]};
    r.tx = -(r.m[0] * tx + r.m[1] * ty);
    r.ty = -(r.m[2] * tx + r.m[3] * ty);
    return r;
}

Iso translation(int x, int y) {
    Iso r;
    r.tx = x;
    r.ty = y;
    return r;
}

Iso point_group(int g) {
    Iso r;
    if (g >= 4) r.m = {-1, 0, 0, 1};
    Iso quarter;
    quarter.m = {0, -1, 1, 0};
    for (int i = 0; i < (g & 3); ++i) r = quarter * r;
    return r;
}

namespace {

const std::array<std::array<int, 4>, 4> kFlip = {{{1, 0, 0, 1}, {-1, 0, 0, 1}, {1, 0, 0, -1}, {-1, 0, 0, -1}}};
const std::array<int, 4> kR90 = {0, -1, 1, 0};

Code flip_code(const std::array<int, 4>& m) {
    for (int c = 0; c < 4; ++c)
        if (kFlip[c] == m) return Code(c);
    throw std::logic_error("not a flip");
}

// Flip of the level-m reference rectangle [0,2^(m+1)]x[0,2^m] about its centre.
Iso flip_at(Code c, int m) {
    Iso r;
    r.m = kFlip[c];
    if (c & 1) r.tx = 2 << m;
    if (c & 2) r.ty = 1 << m;
    return r;
}

Iso scaled(const Iso& g, int factor) {
    Iso r = g;
    r.tx *= factor;
    r.ty *= factor;
    return r;
}

std::array<int, 4> rect_image(const Iso& a, int w, int h) {
    int x0 = 1 << 30, y0 = 1 << 30, x1 = -(1 << 30), y1 = -(1 << 30);
    for (auto [px, py] : {std::pair{0, 0}, {w, 0}, {0, h}, {w, h}}) {
        auto [x, y] = a.apply(px, py);
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
    return {x0, y0, x1, y1};
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Code nth_bit(std::uint8_t mask, int k) {
    for (int d = 0; d < 4; ++d)
        if (mask & (1u << d)) {
            if (k == 0) return Code(d);
            --k;
        }
    throw std::invalid_argument("empty digit in symbol");
}

} // namespace

PlacedDomino domino_of(const Iso& a) {
    PlacedDomino d;
    if (a.m[2] == 0) {
        d.axis = Axis::H;
        d.code = flip_code(a.m);
    } else {
        d.axis = Axis::V;
        Iso l;
        l.m = a.m;
        Iso r;
        r.m = kR90;
        d.code = flip_code((r.inverse() * l).m);
    }
    auto b = rect_image(a, 2, 1);
    d.x = b[0];
    d.y = b[1];
    return d;
}

Iso iso_of(const PlacedDomino& d) {
    Iso a;
    a.m = kFlip[d.code];
    if (d.axis == Axis::V) {
        Iso r;
        r.m = kR90;
        a = r * a;
    }
    auto b = rect_image(a, 2, 1);
    a.tx = d.x - b[0];
    a.ty = d.y - b[1];
    return a;
}

void DominoPatch::normalize() { std::sort(dominoes.begin(), dominoes.end()); }

std::array<int, 4> DominoPatch::bbox() const {
    if (dominoes.empty()) return {0, 0, 0, 0};
    int x0 = 1 << 30, y0 = 1 << 30, x1 = -(1 << 30), y1 = -(1 << 30);
    for (const auto& d : dominoes) {
        int w = d.axis == Axis::H ? 2 : 1, h = d.axis == Axis::H ? 1 : 2;
        x0 = std::min(x0, d.x);
        y0 = std::min(y0, d.y);
        x1 = std::max(x1, d.x + w);
        y1 = std::max(y1, d.y + h);
    }
    return {x0, y0, x1, y1};
}

const std::array<Iso, 4>& child_frames() {
    static const std::array<Iso, 4> F = [] {
        auto j = nlohmann::json::parse(fixture("child_frames"));
        std::array<Iso, 4> f;
        const char* names[4] = {"s", "t", "u", "v"};
        for (int k = 0; k < 4; ++k) {
            const auto& e = j.at(names[k]);
            for (int i = 0; i < 4; ++i) f[k].m[i] = e.at("m").at(i).get<int>();
            f[k].tx = e.at("t").at(0).get<int>();
            f[k].ty = e.at("t").at(1).get<int>();
        }
        return f;
    }();
    return F;
}

Chooser seeded_chooser(std::uint64_t seed) {
    return [seed](const std::vector<int>& path, int slot, std::uint8_t mask) {
        int n = std::popcount(static_cast<unsigned>(mask));
        if (n == 1) return nth_bit(mask, 0);
        std::uint64_t h = splitmix(seed);
        for (int p : path) h = splitmix(h ^ static_cast<std::uint64_t>(p + 1));
        h = splitmix(h ^ static_cast<std::uint64_t>(slot + 11));
        return nth_bit(mask, static_cast<int>(h % static_cast<std::uint64_t>(n)));
    };
}

Chooser sequence_chooser(std::vector<Code> codes) {
    auto state = std::make_shared<std::pair<std::vector<Code>, std::size_t>>(std::move(codes), 0);
    return [state](const std::vector<int>&, int, std::uint8_t mask) {
        if (std::popcount(static_cast<unsigned>(mask)) == 1) return nth_bit(mask, 0);
        auto& [seq, pos] = *state;
        if (pos >= seq.size()) throw std::invalid_argument("choice sequence exhausted");
        Code c = seq[pos++];
        if (!(mask & (1u << c))) throw std::invalid_argument("choice not allowed by symbol");
        return c;
    };
}

namespace {

struct Expander {
    const Symbol& sym;
    const Chooser& choose;
    std::vector<PlacedDomino>* out;
    std::vector<std::array<int, 5>>* rects;
    std::vector<int> path;

    void run(const Iso& frame, int m) {
        if (rects) {
            auto r = rect_image(frame, 2 << m, 1 << m);
            rects->push_back({r[0], r[1], r[2], r[3], m});
        }
        if (m == 0) {
            if (out) out->push_back(domino_of(frame));
            return;
        }
        const auto& cf = child_frames();
        for (int s = 0; s < 4; ++s) {
            Code c = choose(path, s, sym.digits[s]);
            Iso child = frame * scaled(cf[s], 1 << (m - 1)) * flip_at(c, m - 1);
            path.push_back(s);
            run(child, m - 1);
            path.pop_back();
        }
    }
};

} // namespace

DominoPatch expand(const Symbol& s, int n, const Chooser& choose) {
    if (n < 0) throw std::invalid_argument("negative level");
    if (n > kMaxLevel) throw LevelTooLarge("level " + std::to_string(n) + " exceeds the memory budget");
    if (n > 0 && !is_full(s)) throw std::invalid_argument("expand: symbol is not full");
    DominoPatch p;
    p.level = n;
    p.dominoes.reserve(std::size_t(1) << (2 * n));
    Expander e{s, choose, &p.dominoes, nullptr, {}};
    e.run(Iso{}, n);
    p.normalize();
    return p;
}

std::vector<std::array<int, 5>> expand_hierarchy(const Symbol& s, int n) {
    std::vector<std::array<int, 5>> rects;
    Chooser c = seeded_chooser(0);
    Expander e{s, c, nullptr, &rects, {}};
    e.run(Iso{}, n);
    return rects;
}

DominoPatch apply_iso(const DominoPatch& p, const Iso& g) {
    DominoPatch r;
    r.level = p.level;
    for (const auto& d : p.dominoes) r.dominoes.push_back(domino_of(g * iso_of(d)));
    r.normalize();
    return r;
}

DominoPatch relabel(const DominoPatch& p, Code k) {
    DominoPatch r = p;
    for (auto& d : r.dominoes) d.code = nim_add(d.code, k);
    r.normalize();
    return r;
}

DominoPatch translate_to_origin(const DominoPatch& p) {
    auto b = p.bbox();
    return apply_iso(p, translation(-b[0], -b[1]));
}

DominoPatch flip_v_relabel(const DominoPatch& p) {
    Iso m;
    m.m = {1, 0, 0, -1};
    return translate_to_origin(relabel(apply_iso(p, m), 2));
}

namespace {

// All parent patches whose one-step expansion is exactly p.
std::vector<DominoPatch> parent_covers(const DominoPatch& p, const std::array<Code, 4>& code, std::size_t cap) {
    std::vector<DominoPatch> covers;
    if (p.dominoes.empty() || p.dominoes.size() % 4 != 0) return covers;
    std::set<PlacedDomino> present(p.dominoes.begin(), p.dominoes.end());
    const auto& cf = child_frames();
    std::map<PlacedDomino, std::array<PlacedDomino, 4>> cand;
    for (const auto& d : p.dominoes) {
        Iso a = iso_of(d);
        for (int k = 0; k < 4; ++k) {
            Iso b2 = a * flip_at(code[k], 0) * cf[k].inverse();
            if (b2.tx % 2 || b2.ty % 2) continue;
            Iso b = b2;
            b.tx /= 2;
            b.ty /= 2;
            PlacedDomino parent = domino_of(b);
            if (cand.count(parent)) continue;
            std::array<PlacedDomino, 4> kids;
            bool ok = true;
            for (int j = 0; j < 4 && ok; ++j) {
                kids[j] = domino_of(b2 * cf[j] * flip_at(code[j], 0));
                ok = present.count(kids[j]) != 0;
            }
            if (ok) cand.emplace(parent, kids);
        }
    }
    std::map<PlacedDomino, std::vector<const std::pair<const PlacedDomino, std::array<PlacedDomino, 4>>*>> by_child;
    for (const auto& kv : cand)
        for (const auto& k : kv.second) by_child[k].push_back(&kv);

    std::set<PlacedDomino> covered;
    std::vector<PlacedDomino> chosen;
    std::function<void()> search = [&]() {
        if (covers.size() >= cap) return;
        auto it = std::find_if(p.dominoes.begin(), p.dominoes.end(), [&](const auto& d) { return !covered.count(d); });
        if (it == p.dominoes.end()) {
            DominoPatch r;
            r.level = p.level - 1;
            r.dominoes = chosen;
            r.normalize();
            covers.push_back(std::move(r));
            return;
        }
        for (const auto* kv : by_child[*it]) {
            if (std::any_of(kv->second.begin(), kv->second.end(), [&](const auto& k) { return covered.count(k) != 0; }))
                continue;
            for (const auto& k : kv->second) covered.insert(k);
            chosen.push_back(kv->first);
            search();
            chosen.pop_back();
            for (const auto& k : kv->second) covered.erase(k);
        }
    };
    search();
    return covers;
}

// Deepest chain of successive deflations starting from p; returns (depth, final patch).
std::pair<int, DominoPatch> deflate_chain(const DominoPatch& p, const std::array<Code, 4>& code) {
    std::pair<int, DominoPatch> best{0, p};
    if (p.level == 0) return best;
    for (const auto& c : parent_covers(p, code, 4096)) {
        auto sub = deflate_chain(c, code);
        sub.first += 1;
        if (sub.first > best.first || (sub.first == best.first && sub.second.dominoes < best.second.dominoes))
            best = std::move(sub);
    }
    return best;
}

} // namespace

std::optional<DominoPatch> deflate(const DominoPatch& p, const Symbol& s) {
    if (!is_deterministic(s)) throw std::invalid_argument("deflate: symbol is not deterministic");
    if (p.level == 0) return std::nullopt;
    std::array<Code, 4> code;
    for (int k = 0; k < 4; ++k) code[k] = nth_bit(s.digits[k], 0);

    // A whole supertile is recognised directly, which avoids the exponential
    // number of local covers some symbols have.
    for (int k = 1; k <= kMaxLevel && (std::size_t(1) << (2 * k)) <= p.dominoes.size(); ++k) {
        if ((std::size_t(1) << (2 * k)) != p.dominoes.size()) continue;
        DominoPatch e = expand(s, k);
        auto pb = p.bbox();
        for (int g = 0; g < 8; ++g) {
            DominoPatch img = apply_iso(e, point_group(g));
            auto ib = img.bbox();
            Iso shift = translation(pb[0] - ib[0], pb[1] - ib[1]);
            if (!(apply_iso(img, shift) == p)) continue;
            Iso full = shift * point_group(g);
            if (full.tx % 2 || full.ty % 2) continue;
            full.tx /= 2;
            full.ty /= 2;
            DominoPatch r = apply_iso(expand(s, k - 1), full);
            r.level = p.level - 1;
            return r;
        }
    }

    auto covers = parent_covers(p, code, 4096);
    if (covers.empty()) return std::nullopt;
    if (covers.size() == 1) return covers.front();
    // Locally ambiguous: keep the cover that supports the longest hierarchy above it.
    std::optional<DominoPatch> pick;
    std::pair<int, DominoPatch> best{-1, {}};
    for (const auto& c : covers) {
        auto chain = deflate_chain(c, code);
        if (chain.first > best.first || (chain.first == best.first && chain.second.dominoes < best.second.dominoes)) {
            best = chain;
            pick = c;
        }
    }
    return pick;
}

std::vector<std::array<int, 3>> unframed(const DominoPatch& p) {
    std::vector<std::array<int, 3>> out;
    for (const auto& d : p.dominoes) out.push_back({d.x, d.y, d.axis == Axis::H ? 0 : 1});
    std::sort(out.begin(), out.end());
    return out;
}

bool congruent(const DominoPatch& a, const DominoPatch& b, const CongruenceOptions& opt) {
    if (a.dominoes.size() != b.dominoes.size()) return false;
    auto prep = [&](const DominoPatch& p) { return opt.translations ? translate_to_origin(p) : p; };
    DominoPatch tb = prep(b);
    for (int g = 0; g < (opt.point_group ? 8 : 1); ++g) {
        DominoPatch ga = prep(apply_iso(a, point_group(g)));
        if (opt.ignore_codes) {
            if (unframed(ga) == unframed(tb)) return true;
            continue;
        }
        for (Code k = 0; k < (opt.relabel ? 4 : 1); ++k)
            if (relabel(ga, k) == tb) return true;
    }
    return false;
}

std::array<DominoPatch, 2> square_halves(const DominoPatch& p) {
    auto b = p.bbox();
    int mid = (b[0] + b[2]) / 2;
    std::array<DominoPatch, 2> h;
    for (auto& x : h) x.level = p.level;
    for (const auto& d : p.dominoes) (d.x < mid ? h[0] : h[1]).dominoes.push_back(d);
    for (auto& x : h) x.normalize();
    return h;
}

std::vector<Parse> decompositions(const DominoPatch& p, const std::vector<Symbol>& components, bool framed) {
    std::vector<Parse> out;
    std::set<std::vector<std::array<int, 5>>> seen;
    std::size_t m = p.dominoes.size();
    if (m == 0) return out;
    auto pb = p.bbox();
    for (const auto& comp : components) {
        if (!is_deterministic(comp)) throw std::invalid_argument("decompositions: components must be deterministic");
        for (int k = 0; k <= kMaxLevel; ++k) {
            std::size_t whole = std::size_t(1) << (2 * k);
            if (whole > 2 * m) break;
            bool is_whole = whole == m, is_half = k > 0 && whole == 2 * m;
            if (!is_whole && !is_half) continue;
            DominoPatch e = expand(comp, k);
            auto rects = expand_hierarchy(comp, k);
            int side = 1 << k;
            std::vector<std::pair<DominoPatch, std::array<int, 4>>> pieces;
            if (is_whole) pieces.push_back({e, {0, 0, 2 * side, side}});
            else {
                auto h = square_halves(e);
                pieces.push_back({h[0], {0, 0, side, side}});
                pieces.push_back({h[1], {side, 0, 2 * side, side}});
            }
            for (const auto& [piece, region] : pieces)
                for (int g = 0; g < 8; ++g) {
                    Iso gi = point_group(g);
                    DominoPatch img = apply_iso(piece, gi);
                    auto ib = img.bbox();
                    Iso shift = translation(pb[0] - ib[0], pb[1] - ib[1]);
                    img = apply_iso(img, shift);
                    if (framed ? !(img == p) : unframed(img) != unframed(p)) continue;
                    Iso full = shift * gi;
                    std::vector<std::array<int, 5>> part;
                    for (const auto& r : rects) {
                        if (r[0] < region[0] || r[2] > region[2] || r[1] < region[1] || r[3] > region[3]) continue;
                        if (is_half && r[4] == k) continue;
                        auto a = full.apply(r[0], r[1]);
                        auto b = full.apply(r[2], r[3]);
                        part.push_back({std::min(a.first, b.first), std::min(a.second, b.second),
                                        std::max(a.first, b.first), std::max(a.second, b.second), r[4]});
                    }
                    std::sort(part.begin(), part.end());
                    if (seen.insert(part).second) out.push_back({comp, k, g, is_half, part});
                }
        }
    }
    return out;
}

bool hier_equiv_check(const Symbol& a, const Symbol& b, int n) {
    if (unframed(expand(a, n)) != unframed(expand(b, n))) return false;
    auto ra = expand_hierarchy(a, n), rb = expand_hierarchy(b, n);
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
}

std::vector<std::pair<int, int>> periodicity_scan(const DominoPatch& p, bool ignore_codes) {
    std::vector<std::pair<int, int>> out;
    if (p.dominoes.size() < 2) return out;
    auto b = p.bbox();
    int w = b[2] - b[0], h = b[3] - b[1];
    int qx = w / 4, qy = h / 4;
    int ix0 = b[0] + qx, iy0 = b[1] + qy, ix1 = b[2] - qx, iy1 = b[3] - qy;
    std::vector<PlacedDomino> inner;
    for (const auto& d : p.dominoes) {
        int dw = d.axis == Axis::H ? 2 : 1, dh = d.axis == Axis::H ? 1 : 2;
        if (d.x >= ix0 && d.y >= iy0 && d.x + dw <= ix1 && d.y + dh <= iy1) inner.push_back(d);
    }
    if (inner.empty()) return out;
    std::set<PlacedDomino> all;
    for (auto d : p.dominoes) {
        if (ignore_codes) d.code = 0;
        all.insert(d);
    }
    for (int vy = -qy; vy <= qy; ++vy)
        for (int vx = -qx; vx <= qx; ++vx) {
            if (!vx && !vy) continue;
            bool ok = std::all_of(inner.begin(), inner.end(), [&](PlacedDomino d) {
                d.x += vx;
                d.y += vy;
                if (ignore_codes) d.code = 0;
                return all.count(d) != 0;
            });
            if (ok) out.emplace_back(vx, vy);
        }
    return out;
}

} // namespace dt
