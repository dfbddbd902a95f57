#pragma once

#include "domtile/tiles.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dt {

// Cells are unit squares indexed by (x, y) with y growing northward.
using Cell = std::pair<int, int>;

struct PlacedTile {
    Tile tile;
    Pose pose = 0;

    Edges edges() const { return apply_pose(tile.edges, pose); }
};

struct MarkedPatch {
    std::map<Cell, PlacedTile> cells;

    bool empty() const { return cells.empty(); }
    std::array<int, 4> bbox() const; // x0, y0, x1, y1 (exclusive)
};

enum class ViolationKind { Membership, Edge, Vertex };
std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    Cell cell;
    std::string detail;
};

std::vector<Violation> verify_patch(const TileSet& t, const MarkedPatch& p);

enum class Boundary { Free, Fixed, Torus };

struct Region {
    int width = 1;
    int height = 1;
    Boundary boundary = Boundary::Free;
    // Fixed: marks of the outside neighbours along each side, indexed from
    // the west (N, S) or south (E, W) end; absent entries are unconstrained.
    std::array<std::vector<std::optional<EdgeMark>>, 4> outside;
    // Cells whose placement is prescribed.
    std::map<Cell, PlacedTile> preset;
    // Cells restricted to tiles of the given set, in any pose.
    std::map<Cell, TileSet> allowed;
};

enum class Mode { First, Count, All };
enum class Status { Sat, Unsat, Timeout };
std::string to_string(Status s);

constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SolveResult {
    Status status = Status::Unsat;
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    std::vector<MarkedPatch> witnesses;
};

// For Mode::All the callback, when given, receives each tiling instead of the
// witness list; returning false stops the search.
SolveResult solve(const TileSet& t, const Region& r, Mode mode = Mode::First,
                  std::uint64_t budget = kDefaultBudget,
                  const std::function<bool(const MarkedPatch&)>& on_tiling = {});

enum class TorusStatus { Witness, None, NoneByParity, Timeout };
std::string to_string(TorusStatus s);

struct TorusResult {
    TorusStatus status;
    std::optional<MarkedPatch> witness;
    std::uint64_t nodes = 0;
};

TorusResult torus_search(const TileSet& t, int p, int q, std::uint64_t budget = kDefaultBudget);

// Exact count on a free region; nullopt on timeout.
std::optional<std::uint64_t> count_tilings(const TileSet& t, int width, int height,
                                           std::uint64_t budget = kDefaultBudget);

} // namespace dt
