#pragma once

#include "domtile/marks.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dt {

// Four digit subsets s,t,u,v, each a 4-bit mask over {0,1,2,3}.
struct Symbol {
    std::array<std::uint8_t, 4> digits{};

    std::uint8_t s() const { return digits[0]; }
    std::uint8_t t() const { return digits[1]; }
    std::uint8_t u() const { return digits[2]; }
    std::uint8_t v() const { return digits[3]; }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

enum class SymbolClass { Full, Deterministic, Atomic, Partial };
enum class Prop2Class { NotApplicable, PeriodicNonunique, NonperiodicNonunique };

Symbol parse_symbol(std::string_view text);
std::string format_symbol(const Symbol& s);

SymbolClass classify(const Symbol& s);
bool is_full(const Symbol& s);
bool is_deterministic(const Symbol& s);
bool is_atomic(const Symbol& s);

// Atomic symbol with digit d at position pos (0..3 for s,t,u,v).
Symbol atomic(int pos, Code d);
// Position and digit of an atomic symbol.
std::pair<int, Code> atomic_parts(const Symbol& a);

std::vector<Symbol> atoms(const Symbol& s);
std::vector<Symbol> det_components(const Symbol& s);

Symbol symbol_shift(const Symbol& s, Code k);
Symbol partner(const Symbol& s);
bool equivalent(const Symbol& a, const Symbol& b);
Symbol canonical_rep(const Symbol& s);

struct Census {
    long full = 0, self_paired = 0, classes = 0, det_symbols = 0, det_classes = 0;
};
Census census();

Prop2Class prop2_classify(const Symbol& s);
std::string to_string(SymbolClass c);
std::string to_string(Prop2Class c);

// Shift orbits {S, S+1, S+2, S+3} of the Prop-2-applicable full symbols,
// restricted to s != u when distinct_only is set. Each orbit sorted, list sorted.
std::vector<std::vector<Symbol>> prop2_orbits(bool distinct_only);

// All deterministic symbols in lexicographic digit order.
std::vector<Symbol> deterministic_symbols();

} // namespace dt
