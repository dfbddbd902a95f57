#pragma once

#include "domtile/blocks.hpp"
#include "domtile/patch.hpp"
#include "domtile/symbols.hpp"
#include "domtile/tiles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dt {

struct TranscriptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Transcribed tables instantiated at the atom's digit.
const AtomicTables& transcribed_atomics();

// Cells where the transcribed tables and derive_atomics disagree.
std::vector<std::string> oracle_mismatches();

// Both throw TranscriptionError when the oracle disagrees with the fixture.
const TileSet& atomic_tiles(const Atom& a);
const TileSet& pair_tiles(const Atom& parent, const Atom& child);

// T+2 together with T0.
const TileSet& common_tiles();

// Common tiles with the atomic and pair sets of every deterministic component.
TileSet synthesize(const Symbol& s);
bool shift_law_check(const Symbol& s);

struct Theorem1Row {
    std::string name;
    TileSet tiles;
    std::vector<Rule> rules; // enforced system
    std::string admits;      // expected admitted blocks, e.g. "IU"
};

std::vector<Theorem1Row> theorem1_sets();

// Tiles of synthesize(s) not produced by a level-n marked supertile.
TileSet usage_check(const Symbol& s, int n);

// A T1 rule system or a deterministic symbol.
struct SupertileContext {
    std::vector<Rule> rules;
    std::optional<Symbol> symbol;

    static SupertileContext of(std::vector<Rule> r) { return {std::move(r), std::nullopt}; }
    static SupertileContext of(const Symbol& s) { return {{}, s}; }
    std::string label() const;
    TileSet tiles() const; // closure of the rules, or synthesize(symbol)
};

struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SupertileLayout {
    int width = 0;
    int height = 0;
    std::vector<Cell> cornered;
    std::vector<Cell> centres; // uncornered outward tiles of the half blocks
};

int max_supertile_level();
SupertileLayout supertile_layout(int level);

struct MarkedSupertile {
    int level = 0;
    TileSet tiles;
    MarkedPatch patch;
    std::vector<BlockType> blocks; // admitted by the tiles the patch uses
};

// Throws LayoutError past max_supertile_level, std::runtime_error when the
// layout cannot be completed from the context's tiles.
MarkedSupertile build_marked_supertile(const SupertileContext& ctx, int level,
                                       std::uint64_t budget = kDefaultBudget);

} // namespace dt
