#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dt {

// Framing codes live in Z2 (+) Z2; addition is XOR.
using Code = std::uint8_t;

constexpr Code nim_add(Code x, Code y) { return static_cast<Code>((x ^ y) & 3u); }

struct FrameVars {
    Code b, q, p;
};

constexpr FrameVars frame_vars(Code d) {
    return {nim_add(d, 1), nim_add(d, 2), nim_add(d, 3)};
}

enum class Context : std::uint8_t { T1, T2 };

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at)
        : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

struct ContextError : std::logic_error {
    using std::logic_error::logic_error;
};

// a: +1/-1 direction, b: -1/0/+1 sidedness, c: 0..3 structure, d: framing or absent.
struct EdgeMark {
    std::int8_t a = 1;
    std::int8_t b = 0;
    std::uint8_t c = 0;
    std::optional<Code> d;

    static constexpr int kCount = 120;

    Context context() const { return d ? Context::T2 : Context::T1; }
    bool plain() const { return b == 0 && c == 0 && (!d || *d == 0); }

    // Dense id in [0,120); absent d takes slot 4.
    int id() const;
    static EdgeMark from_id(int id);

    friend bool operator==(const EdgeMark&, const EdgeMark&) = default;
    friend auto operator<=>(const EdgeMark& x, const EdgeMark& y) { return x.id() <=> y.id(); }
};

EdgeMark plain_mark(int sign, Context ctx);

bool mark_matches(const EdgeMark& m, const EdgeMark& n);
// The unique mark that matches m.
EdgeMark mark_partner(const EdgeMark& m);
EdgeMark mark_reflect(const EdgeMark& m);
EdgeMark mark_shift(const EdgeMark& m, Code k);

std::string format_mark(const EdgeMark& m);
// A bare "+" or "-" takes its d from ctx (0 in T2, absent in T1).
EdgeMark parse_mark(std::string_view text, Context ctx = Context::T2);

} // namespace dt
