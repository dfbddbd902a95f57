#include "domtile/symbols.hpp"

#include <algorithm>
#include <bit>

namespace dt {

namespace {

int popcount(std::uint8_t m) { return std::popcount(static_cast<unsigned>(m)); }

std::uint8_t shift_mask(std::uint8_t m, Code k) {
    std::uint8_t r = 0;
    for (int d = 0; d < 4; ++d)
        if (m & (1u << d)) r |= static_cast<std::uint8_t>(1u << nim_add(Code(d), k));
    return r;
}

} // namespace

Symbol parse_symbol(std::string_view text) {
    Symbol s;
    std::size_t i = 0;
    for (int f = 0; f < 4; ++f) {
        if (i >= text.size()) throw ParseError("symbol needs four fields", i);
        char ch = text[i];
        if (ch >= '0' && ch <= '3') {
            s.digits[f] = static_cast<std::uint8_t>(1u << (ch - '0'));
            ++i;
        } else if (ch == '.') {
            ++i;
        } else if (ch == '*') {
            s.digits[f] = 0xF;
            ++i;
        } else if (ch == '(') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && text[i] != ')') {
                if (text[i] < '0' || text[i] > '3') throw ParseError(std::string("bad digit '") + text[i] + "'", i);
                s.digits[f] |= static_cast<std::uint8_t>(1u << (text[i] - '0'));
                ++i;
            }
            if (i >= text.size()) throw ParseError("unclosed '('", start - 1);
            if (i == start) throw ParseError("empty parentheses", i);
            ++i;
        } else {
            throw ParseError(std::string("unexpected '") + ch + "'", i);
        }
    }
    if (i != text.size()) throw ParseError("trailing characters", i);
    return s;
}

std::string format_symbol(const Symbol& s) {
    std::string out;
    for (auto m : s.digits) {
        int n = popcount(m);
        if (n == 0) out += '.';
        else if (n == 4) out += '*';
        else if (n == 1) out += char('0' + std::countr_zero(static_cast<unsigned>(m)));
        else {
            out += '(';
            for (int d = 0; d < 4; ++d)
                if (m & (1u << d)) out += char('0' + d);
            out += ')';
        }
    }
    return out;
}

bool is_full(const Symbol& s) {
    return std::all_of(s.digits.begin(), s.digits.end(), [](auto m) { return m != 0; });
}

bool is_deterministic(const Symbol& s) {
    return std::all_of(s.digits.begin(), s.digits.end(), [](auto m) { return popcount(m) == 1; });
}

bool is_atomic(const Symbol& s) {
    int singles = 0, empty = 0;
    for (auto m : s.digits) {
        if (popcount(m) == 1) ++singles;
        if (m == 0) ++empty;
    }
    return singles == 1 && empty == 3;
}

SymbolClass classify(const Symbol& s) {
    if (is_deterministic(s)) return SymbolClass::Deterministic;
    if (is_full(s)) return SymbolClass::Full;
    if (is_atomic(s)) return SymbolClass::Atomic;
    return SymbolClass::Partial;
}

Symbol atomic(int pos, Code d) {
    Symbol s;
    s.digits[pos] = static_cast<std::uint8_t>(1u << d);
    return s;
}

std::pair<int, Code> atomic_parts(const Symbol& a) {
    for (int p = 0; p < 4; ++p)
        if (a.digits[p]) return {p, Code(std::countr_zero(static_cast<unsigned>(a.digits[p])))};
    return {-1, 0};
}

std::vector<Symbol> atoms(const Symbol& s) {
    std::vector<Symbol> out;
    for (int p = 0; p < 4; ++p)
        for (int d = 0; d < 4; ++d)
            if (s.digits[p] & (1u << d)) out.push_back(atomic(p, Code(d)));
    return out;
}

std::vector<Symbol> det_components(const Symbol& s) {
    if (!is_full(s)) throw std::invalid_argument("det_components: symbol is not full");
    std::vector<Symbol> out{Symbol{}};
    for (int p = 0; p < 4; ++p) {
        std::vector<Symbol> next;
        for (const auto& partial : out)
            for (int d = 0; d < 4; ++d)
                if (s.digits[p] & (1u << d)) {
                    Symbol x = partial;
                    x.digits[p] = static_cast<std::uint8_t>(1u << d);
                    next.push_back(x);
                }
        out = std::move(next);
    }
    return out;
}

Symbol symbol_shift(const Symbol& s, Code k) {
    Symbol r;
    for (int p = 0; p < 4; ++p) r.digits[p] = shift_mask(s.digits[p], k);
    return r;
}

Symbol partner(const Symbol& s) {
    Symbol r;
    r.digits = {shift_mask(s.t(), 3), shift_mask(s.s(), 3), shift_mask(s.u(), 3), shift_mask(s.v(), 3)};
    return r;
}

bool equivalent(const Symbol& a, const Symbol& b) { return a == b || partner(a) == b; }

Symbol canonical_rep(const Symbol& s) {
    Symbol p = partner(s);
    return format_symbol(p) < format_symbol(s) ? p : s;
}

std::vector<Symbol> deterministic_symbols() {
    std::vector<Symbol> out;
    for (int i = 0; i < 256; ++i) {
        Symbol s;
        for (int p = 0; p < 4; ++p) s.digits[p] = static_cast<std::uint8_t>(1u << ((i >> (2 * (3 - p))) & 3));
        out.push_back(s);
    }
    return out;
}

Census census() {
    Census c;
    for (int a = 1; a < 16; ++a)
        for (int b = 1; b < 16; ++b)
            for (int x = 1; x < 16; ++x)
                for (int y = 1; y < 16; ++y) {
                    Symbol s;
                    s.digits = {std::uint8_t(a), std::uint8_t(b), std::uint8_t(x), std::uint8_t(y)};
                    ++c.full;
                    Symbol p = partner(s);
                    if (p == s) ++c.self_paired;
                    if (!(p < s)) ++c.classes;
                    if (is_deterministic(s)) {
                        ++c.det_symbols;
                        if (!(p < s)) ++c.det_classes;
                    }
                }
    return c;
}

Prop2Class prop2_classify(const Symbol& s) {
    if (!is_full(s)) throw std::invalid_argument("prop2_classify: symbol is not full");
    auto allowed = [](std::uint8_t m) { return popcount(m) == 1 || m == 0b0101 || m == 0b1010; };
    if (s.s() != s.t() || s.u() != s.v() || !allowed(s.s()) || !allowed(s.u())) return Prop2Class::NotApplicable;
    return s.s() != s.u() ? Prop2Class::NonperiodicNonunique : Prop2Class::PeriodicNonunique;
}

std::vector<std::vector<Symbol>> prop2_orbits(bool distinct_only) {
    const std::uint8_t vals[6] = {0b0001, 0b0010, 0b0100, 0b1000, 0b0101, 0b1010};
    std::vector<std::vector<Symbol>> out;
    for (auto a : vals)
        for (auto b : vals) {
            if (distinct_only && a == b) continue;
            Symbol s;
            s.digits = {a, a, b, b};
            std::vector<Symbol> orbit;
            for (Code k = 0; k < 4; ++k) orbit.push_back(symbol_shift(s, k));
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            if (std::find(out.begin(), out.end(), orbit) == out.end()) out.push_back(orbit);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(SymbolClass c) {
    switch (c) {
    case SymbolClass::Full: return "FULL";
    case SymbolClass::Deterministic: return "DETERMINISTIC";
    case SymbolClass::Atomic: return "ATOMIC";
    case SymbolClass::Partial: return "PARTIAL";
    }
    return "?";
}

std::string to_string(Prop2Class c) {
    switch (c) {
    case Prop2Class::NotApplicable: return "NOT_APPLICABLE";
    case Prop2Class::PeriodicNonunique: return "PERIODIC_NONUNIQUE";
    case Prop2Class::NonperiodicNonunique: return "NONPERIODIC_NONUNIQUE";
    }
    return "?";
}

} // namespace dt
