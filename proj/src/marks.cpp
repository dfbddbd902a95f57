#include "domtile/marks.hpp"

namespace dt {

namespace {

int side_index(int b) { return b == 0 ? 0 : (b > 0 ? 1 : 2); }
int side_value(int i) { return i == 0 ? 0 : (i == 1 ? 1 : -1); }

} // namespace

int EdgeMark::id() const {
    int ai = a > 0 ? 0 : 1;
    int di = d ? *d : 4;
    return ((ai * 3 + side_index(b)) * 4 + c) * 5 + di;
}

EdgeMark EdgeMark::from_id(int id) {
    EdgeMark m;
    int di = id % 5;
    id /= 5;
    m.c = static_cast<std::uint8_t>(id % 4);
    id /= 4;
    m.b = static_cast<std::int8_t>(side_value(id % 3));
    m.a = static_cast<std::int8_t>(id / 3 == 0 ? 1 : -1);
    if (di < 4) m.d = static_cast<Code>(di);
    return m;
}

EdgeMark plain_mark(int sign, Context ctx) {
    EdgeMark m;
    m.a = static_cast<std::int8_t>(sign >= 0 ? 1 : -1);
    if (ctx == Context::T2) m.d = 0;
    return m;
}

bool mark_matches(const EdgeMark& m, const EdgeMark& n) {
    if (m.context() != n.context()) throw ContextError("mark_matches: mixed T1/T2 marks");
    return m.a == -n.a && m.b == -n.b && m.c == n.c && m.d == n.d;
}

EdgeMark mark_partner(const EdgeMark& m) {
    EdgeMark r = m;
    r.a = static_cast<std::int8_t>(-m.a);
    r.b = static_cast<std::int8_t>(-m.b);
    return r;
}

EdgeMark mark_reflect(const EdgeMark& m) {
    EdgeMark r = m;
    r.b = static_cast<std::int8_t>(-m.b);
    return r;
}

EdgeMark mark_shift(const EdgeMark& m, Code k) {
    if (!m.d) throw ContextError("mark_shift: T1 marks carry no framing");
    if (m.plain()) return m;
    EdgeMark r = m;
    r.d = nim_add(*m.d, k);
    return r;
}

std::string format_mark(const EdgeMark& m) {
    std::string s(1, m.a > 0 ? '+' : '-');
    if (m.plain()) return s;
    s += m.b == 0 ? '0' : (m.b > 0 ? '+' : '-');
    s += static_cast<char>('0' + m.c);
    if (m.d) s += static_cast<char>('0' + *m.d);
    return s;
}

EdgeMark parse_mark(std::string_view text, Context ctx) {
    if (text.empty()) throw ParseError("empty mark", 0);
    auto sign = [&](std::size_t i) -> int {
        if (text[i] == '+') return 1;
        if (text[i] == '-') return -1;
        throw ParseError(std::string("expected '+' or '-', got '") + text[i] + "'", i);
    };
    auto digit = [&](std::size_t i) -> std::uint8_t {
        char ch = text[i];
        if (ch < '0' || ch > '3') throw ParseError(std::string("expected digit 0-3, got '") + ch + "'", i);
        return static_cast<std::uint8_t>(ch - '0');
    };
    EdgeMark m;
    m.a = static_cast<std::int8_t>(sign(0));
    if (text.size() == 1) {
        if (ctx == Context::T2) m.d = 0;
        return m;
    }
    if (text.size() < 3) throw ParseError("truncated mark", text.size());
    if (text.size() > 4) throw ParseError("trailing characters", 4);
    m.b = static_cast<std::int8_t>(text[1] == '0' ? 0 : sign(1));
    m.c = digit(2);
    if (text.size() == 4) m.d = digit(3);
    return m;
}

} // namespace dt
