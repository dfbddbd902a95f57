#pragma once

#include "domtile/blocks.hpp"
#include "domtile/patch.hpp"
#include "domtile/substitution.hpp"
#include "domtile/tiles.hpp"

#include <json.hpp>

#include <array>
#include <string>

namespace dt {

using Json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tile sets: {"name", "context", "tiles": [{"cornered", "edges": {"N","E","S","W"}}]}.
// Reading also accepts {"names": [...]}.
Json tileset_to_json(const TileSet& t);
TileSet tileset_from_json(const Json& j);

// {"level", "dominoes": [{"x","y","axis","code"}]}
Json domino_patch_to_json(const DominoPatch& p);
DominoPatch domino_patch_from_json(const Json& j);

// {"cells": [{"x","y","tile","pose"}]}, pose relative to the named tile.
Json marked_patch_to_json(const MarkedPatch& p);
MarkedPatch marked_patch_from_json(const Json& j);

// {"atomic": {"1...": set}, "pairs": {"1...>..0.": set}}
Json atomic_tables_to_json(const AtomicTables& t);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

struct RenderSpec {
    std::array<std::string, 4> code_colors{"#1b1b1b", "#f4f4f4", "#8c8c8c", "#c8c8c8"};
    std::array<std::string, 4> channel_colors{"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
    std::string plain_color = "#7f7f7f";
    int scale = 16;
    bool show_marks = true;
    bool show_codes = false;
};

// Swaps the code palette 0<->2, 1<->3.
RenderSpec swapped_palette(RenderSpec s);

std::string render_domino_svg(const DominoPatch& p, const RenderSpec& spec = {});
std::string render_marked_svg(const MarkedPatch& p, const RenderSpec& spec = {});

// Dominoes: code digits on even columns and rows, '-' and '|' join the two
// cells of a domino, '.' is an empty cell. Top row first.
std::string render_ascii(const DominoPatch& p);
DominoPatch parse_ascii(const std::string& text);

// Marked patches: a 3x3 glyph per tile, centre C (cornered), o (outward) or
// x (crossing), sides show the mark's c digit, '+' or '-' when plain.
std::string render_ascii(const MarkedPatch& p);

} // namespace dt
