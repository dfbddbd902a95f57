#pragma once

#include "domtile/marks.hpp"
#include "domtile/tiles.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace dt {

enum class BlockType : std::uint8_t { U, J, I, H };
enum class Rule : std::uint8_t { Pi, Par, Xi, PiBar };

char to_char(BlockType b);
BlockType parse_block_type(char c);
std::string to_string(Rule r);
Rule parse_rule(const std::string& s);

// Label at positions i..ix: "+", a digit, or "x" at ii.
using MarkingFrame = std::array<std::string, 9>;
const MarkingFrame& frame_assignment(BlockType b);

// x is the mark class at ii: -1 generic, 4 for "+", otherwise the digit.
struct BlockState {
    BlockType type = BlockType::U;
    int x = -1;

    friend auto operator<=>(const BlockState&, const BlockState&) = default;
};

constexpr int kGeneric = -1;
constexpr int kPlain = 4;

std::string format_state(const BlockState& s);

struct Production {
    Rule rule;
    BlockType block;
    int pibar_case = -1; // 0 for d in {0,2}, 1 for d in {1,3}; -1 otherwise
    std::vector<std::string> children;
    std::vector<std::string> tally;
};

const std::vector<Production>& productions();

struct RuleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Substitution {
    std::vector<BlockState> children;
    std::vector<std::string> tally; // canonical T1 names; tiles depending on a generic x are omitted
};

// All productions of rule applicable to st (two for a Pi-bar J block).
std::vector<Substitution> block_substitute(Rule rule, const BlockState& st);

struct ClosureResult {
    TileSet tiles;
    std::set<BlockState> states;
};

// Fixed point from the given seeds, united with T+. Default seeds are the
// generic blocks each rule applies to.
ClosureResult closure(const std::vector<Rule>& rules, std::vector<BlockState> seeds = {});

const TileSet& block_tiles(BlockType b);
std::vector<BlockType> block_admissibility(const TileSet& t);

// Framing digit of the pair [3y|x] for a vertical mark x.
Code y_of(const EdgeMark& x);

} // namespace dt

#include "domtile/symbols.hpp"

#include <map>

namespace dt {

// Second tile set: a child slot (0..3 for s,t,u,v) with its framing digit.
struct Atom {
    int slot = 0;
    Code digit = 0;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

std::string format_atom(const Atom& a); // e.g. "1..." or "..0."

// Vertical mark class carried at ii: generic, plain, or (z, w).
struct VMark {
    int z = kGeneric;
    Code w = 0;

    friend auto operator<=>(const VMark&, const VMark&) = default;
};

std::string format_vmark(const VMark& m); // "x", "+", or "zw"

struct T2State {
    int slot = 0;
    Code orient = 0;
    VMark x;

    friend auto operator<=>(const T2State&, const T2State&) = default;
};

BlockType slot_block(int slot);

enum class TallySource { Common, Atomic, Pair };

struct TallyItem {
    std::string tile; // canonical name
    TallySource source = TallySource::Common;
    Atom child;       // Atomic and Pair
    Atom parent;      // Pair
};

struct T2Substitution {
    std::vector<T2State> children;
    std::vector<TallyItem> tally;
};

// One substitution of a marked block inside an S-hierarchy. The block's own
// crossings, its children's boundary pairs and the plain crossings of its
// labels are tallied.
T2Substitution t2_block_substitute(const Symbol& s, const T2State& st);

// Top blocks of an S-hierarchy: each slot at its digit, x generic.
std::vector<T2State> t2_seeds(const Symbol& s);

// Union of tallies after `rounds` substitution rounds from the seeds
// (negative: to the fixed point), together with T+2 and [-|+].
TileSet t2_closure(const Symbol& s, int rounds = -1);

struct AtomicTables {
    std::map<Atom, TileSet> atomic;
    std::map<std::pair<Atom, Atom>, TileSet> pairs; // (parent, child)
};

// Tables computed from t2_block_substitute over every deterministic symbol.
const AtomicTables& derive_atomics();

} // namespace dt
