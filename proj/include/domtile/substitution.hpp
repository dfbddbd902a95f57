#pragma once

#include "domtile/symbols.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dt {

// Lattice isometry x -> M x + t with M in the dihedral group of the square.
struct Iso {
    std::array<int, 4> m{1, 0, 0, 1}; // row-major 2x2
    int tx = 0, ty = 0;

    std::pair<int, int> apply(int x, int y) const { return {m[0] * x + m[1] * y + tx, m[2] * x + m[3] * y + ty}; }
    Iso operator*(const Iso& o) const; // this after o
    Iso inverse() const;
    friend bool operator==(const Iso&, const Iso&) = default;
};

// The eight linear parts; index g follows tile poses (g&3 quarter turns after a mirror when g>=4).
Iso point_group(int g);
Iso translation(int x, int y);

enum class Axis : std::uint8_t { H, V };

struct PlacedDomino {
    int x = 0, y = 0; // min corner
    Axis axis = Axis::H;
    Code code = 0;

    friend bool operator==(const PlacedDomino&, const PlacedDomino&) = default;
    friend auto operator<=>(const PlacedDomino&, const PlacedDomino&) = default;
};

// Placed domino <-> isometry of the reference rectangle [0,2]x[0,1].
PlacedDomino domino_of(const Iso& a);
Iso iso_of(const PlacedDomino& d);

struct DominoPatch {
    int level = 0;
    std::vector<PlacedDomino> dominoes; // kept sorted

    void normalize();
    std::array<int, 4> bbox() const; // x0, y0, x1, y1 (exclusive)
    friend bool operator==(const DominoPatch& a, const DominoPatch& b) { return a.dominoes == b.dominoes; }
};

enum class Slot { s = 0, t = 1, u = 2, v = 3 };

// Code-0 placement of each child slot inside the doubled domino [0,4]x[0,2].
const std::array<Iso, 4>& child_frames();

// Resolves the code for a slot given the path (sequence of slots from the root).
using Chooser = std::function<Code(const std::vector<int>& path, int slot, std::uint8_t mask)>;
Chooser seeded_chooser(std::uint64_t seed);
// Consumes codes in depth-first order; throws when exhausted or a code is not allowed.
Chooser sequence_chooser(std::vector<Code> codes);

constexpr int kMaxLevel = 11;

struct LevelTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Level-n supertile in the frame [0,2^(n+1)]x[0,2^n] with code 0.
DominoPatch expand(const Symbol& s, int n, const Chooser& choose = seeded_chooser(0));
// Rectangles of every supertile in the hierarchy, coarsest first: {x0,y0,x1,y1,level}.
std::vector<std::array<int, 5>> expand_hierarchy(const Symbol& s, int n);

DominoPatch apply_iso(const DominoPatch& p, const Iso& g);
DominoPatch relabel(const DominoPatch& p, Code k);
// Vertical flip (y -> -y) followed by code relabeling by +2, normalized to the origin.
DominoPatch flip_v_relabel(const DominoPatch& p);
DominoPatch translate_to_origin(const DominoPatch& p);

// nullopt stands for NO_DECOMPOSITION.
std::optional<DominoPatch> deflate(const DominoPatch& p, const Symbol& s);

struct CongruenceOptions {
    bool translations = true;
    bool point_group = false;
    bool relabel = false;
    bool ignore_codes = false;
};
bool congruent(const DominoPatch& a, const DominoPatch& b, const CongruenceOptions& opt = {});

// Cells of p without codes, as sorted (x, y, axis) triples.
std::vector<std::array<int, 3>> unframed(const DominoPatch& p);

// Left and right square halves of a level-n supertile in standard frame.
std::array<DominoPatch, 2> square_halves(const DominoPatch& p);

struct Parse {
    Symbol component;
    int level = 0;
    int pose = 0;
    bool half = false;
    std::vector<std::array<int, 5>> rects; // nested partition in p's coordinates
};
// Distinct nested partitions of p as a whole supertile, or as a square half of one.
// Dominoes are compared with codes unless framed is cleared.
std::vector<Parse> decompositions(const DominoPatch& p, const std::vector<Symbol>& components, bool framed = true);

// Same cells and the same supertile rectangles at every level.
bool hier_equiv_check(const Symbol& a, const Symbol& b, int n);

// Nonzero translations v with |vx| <= W/4, |vy| <= H/4 mapping the dominoes of the
// central region (bbox shrunk by a quarter per side) into p.
std::vector<std::pair<int, int>> periodicity_scan(const DominoPatch& p, bool ignore_codes = false);

} // namespace dt
