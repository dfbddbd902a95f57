#pragma once

#include "domtile/marks.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace dt {

enum Side : int { N = 0, E = 1, S = 2, W = 3 };
enum class Role : std::uint8_t { Outward, Crossing };

// Pose g in 0..7: (g & 3) counter-clockwise quarter turns, applied after
// a mirror in the vertical axis when g >= 4.
using Pose = int;
constexpr int kPoses = 8;
Pose pose_compose(Pose g, Pose h); // g after h
Pose pose_inverse(Pose g);

using Edges = std::array<EdgeMark, 4>;
Edges apply_pose(const Edges& e, Pose g);

// Normal form under the point group: cornered flag followed by the
// lexicographically least edge-id tuple over the eight images.
using TileKey = std::array<int, 5>;

struct Tile {
    bool cornered = false;
    Edges edges{};
    Role role = Role::Crossing;
    std::string name;

    Context context() const { return edges[0].context(); }
    TileKey key() const;
    Tile posed(Pose g) const;
};

struct UnnameableTile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Horizontal classes: "-", "0", "1", "3", "-3". Vertical: "+" or a digit.
Tile make_crossing_t1(const std::string& h, char v);
// y ignored for h == "-"; vertical plain when z < 0.
Tile make_crossing_t2(const std::string& x, int y, int z, int w);
// kind 1: (+)(+)(++1)(+-0), kind 2: (+)(+-2)(+)(++3), listed N,E,S,W.
Tile make_outward(int kind, bool cornered, std::optional<Code> d);

std::string canonical_name(const Tile& t);
Tile tile_from_name(const std::string& name, Context ctx = Context::T2);
Tile tile_from_edges(bool cornered, const Edges& e);

bool congruent(const Tile& a, const Tile& b);

// Distinct (pose, edges) images, first pose kept per image.
std::vector<std::pair<Pose, Edges>> placements(const Tile& t);

Tile forget_d(const Tile& t);
Tile tile_shift(const Tile& t, Code k);

class TileSet {
public:
    std::string name;

    TileSet() = default;
    explicit TileSet(std::string n) : name(std::move(n)) {}
    TileSet(std::string n, const std::vector<Tile>& ts);

    bool insert(const Tile& t);
    bool contains(const Tile& t) const { return members_.count(t.key()) != 0; }
    bool contains(const std::string& tile_name) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    // Members in canonical-name order.
    std::vector<Tile> tiles() const;
    std::vector<std::string> names() const;

    TileSet united(const TileSet& o, std::string n = {}) const;
    TileSet minus(const TileSet& o, std::string n = {}) const;
    bool subset_of(const TileSet& o) const;
    Context context() const;

    friend bool operator==(const TileSet& a, const TileSet& b) { return a.size() == b.size() && a.subset_of(b); }

private:
    std::map<TileKey, Tile> members_;
};

TileSet tileset_shift(const TileSet& t, Code k);
TileSet tileset_from_names(const std::string& set_name, const std::vector<std::string>& names,
                           Context ctx = Context::T2);

// One of: T1 T+ Thv K1 U1 T_U T_J T_I T_H T_Pi T_Par T_Xi T_Pibar T+2 K2 U2 T0 T2
const TileSet& catalogue(const std::string& name);
std::vector<std::string> catalogue_names();

} // namespace dt
