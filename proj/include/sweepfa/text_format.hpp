#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "automaton.hpp"
#include "dfa.hpp"

namespace sweepfa {

// Error in the textual automaton format; line numbers are 1-based, 0 means
// the problem is with the file as a whole (e.g. a missing field).
struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

namespace detail {

struct Field {
    int line = 0;
    std::string key;
    std::string value;
};

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Key-value lines with '#' comments; the key runs up to the first ':'.
inline std::vector<Field> split_fields(std::string_view text) {
    std::vector<Field> fields;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) {
            size_t colon = line.find(':');
            if (colon == std::string_view::npos)
                throw ParseError(line_no, "expected 'key: value'");
            Field f;
            f.line = line_no;
            f.key = std::string(trim(line.substr(0, colon)));
            f.value = std::string(trim(line.substr(colon + 1)));
            if (f.key.empty()) throw ParseError(line_no, "empty field name");
            fields.push_back(std::move(f));
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return fields;
}

inline uint32_t parse_uint(std::string_view tok, int line, const std::string& what) {
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, what + ": expected a number, got '" + std::string(tok) + "'");
    return v;
}

// "q3" / "r1" -> StateId, range-checked against the side sizes.
inline StateId parse_state_name(std::string_view tok, uint32_t plus_count, uint32_t minus_count,
                                int line) {
    if (tok.size() < 2 || (tok[0] != 'q' && tok[0] != 'r'))
        throw ParseError(line, "expected a state name like q0 or r1, got '" + std::string(tok) + "'");
    Side side = tok[0] == 'q' ? Side::plus : Side::minus;
    uint32_t idx = parse_uint(tok.substr(1), line, "state name");
    uint32_t limit = side == Side::plus ? plus_count : minus_count;
    if (idx >= limit)
        throw ParseError(line, "state " + std::string(tok) + " out of range");
    return {side, idx};
}

inline std::pair<std::string, std::string> split_arrow(std::string_view tok, int line) {
    size_t arrow = tok.find("->");
    if (arrow == std::string_view::npos)
        throw ParseError(line, "expected a pair like 0->1, got '" + std::string(tok) + "'");
    return {std::string(tok.substr(0, arrow)), std::string(tok.substr(arrow + 2))};
}

// "i->j ..." covering every source 0..n-1 exactly once, targets < n.
// Totality and ranges are enforced here; bijectivity is validation's job.
inline std::vector<uint32_t> parse_total_map(const Field& f, uint32_t n) {
    std::vector<uint32_t> map(n, 0);
    std::vector<bool> have(n, false);
    for (const auto& tok : split_ws(f.value)) {
        auto [lhs, rhs] = split_arrow(tok, f.line);
        uint32_t src = parse_uint(lhs, f.line, f.key);
        uint32_t dst = parse_uint(rhs, f.line, f.key);
        if (src >= n) throw ParseError(f.line, f.key + ": source " + lhs + " out of range");
        if (dst >= n) throw ParseError(f.line, f.key + ": target " + rhs + " out of range");
        if (have[src]) throw ParseError(f.line, f.key + ": source " + lhs + " listed twice");
        have[src] = true;
        map[src] = dst;
    }
    for (uint32_t i = 0; i < n; ++i)
        if (!have[i])
            throw ParseError(f.line, f.key + ": missing image of " + std::to_string(i));
    return map;
}

class FieldSet {
  public:
    explicit FieldSet(std::vector<Field> fields) : fields_(std::move(fields)) {
        for (size_t i = 0; i < fields_.size(); ++i) {
            auto [it, fresh] = index_.emplace(fields_[i].key, i);
            if (!fresh)
                throw ParseError(fields_[i].line, "duplicate field '" + fields_[i].key + "'");
        }
    }

    const Field* find(const std::string& key) const {
        auto it = index_.find(key);
        return it == index_.end() ? nullptr : &fields_[it->second];
    }

    const Field& require(const std::string& key) {
        const Field* f = find(key);
        if (!f) throw ParseError(0, "missing field '" + key + "'");
        used_.insert(key);
        return *f;
    }

    const Field* take(const std::string& key) {
        const Field* f = find(key);
        if (f) used_.insert(key);
        return f;
    }

    void reject_unknown() const {
        for (const auto& f : fields_)
            if (!used_.count(f.key))
                throw ParseError(f.line, "unknown field '" + f.key + "'");
    }

  private:
    std::vector<Field> fields_;
    std::map<std::string, size_t> index_;
    std::set<std::string> used_;
};

inline std::vector<char> parse_alphabet(const Field& f) {
    std::vector<char> alphabet;
    for (const auto& tok : split_ws(f.value)) {
        if (tok.size() != 1)
            throw ParseError(f.line, "alphabet symbols must be single characters, got '" + tok + "'");
        alphabet.push_back(tok[0]);
    }
    return alphabet;
}

} // namespace detail

inline SweepingAutomaton parse_sweeping(std::string_view text) {
    using namespace detail;
    FieldSet fields(split_fields(text));

    const Field& type = fields.require("type");
    SweepingAutomaton a;
    if (type.value == "2perfa") a.flavor = Flavor::classic;
    else if (type.value == "2perfa-gen") a.flavor = Flavor::generalized;
    else throw ParseError(type.line, "expected type 2perfa or 2perfa-gen, got '" + type.value + "'");

    a.alphabet = parse_alphabet(fields.require("alphabet"));
    const Field& qplus = fields.require("qplus");
    a.plus_count = parse_uint(qplus.value, qplus.line, "qplus");
    const Field& qminus = fields.require("qminus");
    a.minus_count = parse_uint(qminus.value, qminus.line, "qminus");

    const Field& initial = fields.require("initial");
    StateId init = parse_state_name(initial.value, a.plus_count, a.minus_count, initial.line);
    if (init.side != Side::plus)
        throw ParseError(initial.line, "initial state must be on the plus side");
    a.initial = init.index;

    a.accept_plus.assign(a.plus_count, false);
    a.accept_minus.assign(a.minus_count, false);
    const Field& accept = fields.require("accept");
    for (const auto& tok : split_ws(accept.value)) {
        StateId s = parse_state_name(tok, a.plus_count, a.minus_count, accept.line);
        auto& mask = s.side == Side::plus ? a.accept_plus : a.accept_minus;
        if (mask[s.index]) throw ParseError(accept.line, "state " + tok + " accepted twice");
        mask[s.index] = true;
    }

    for (char c : a.alphabet) {
        auto table = [&](const std::string& prefix, uint32_t n, std::vector<Permutation>& out) {
            std::string key = prefix + " " + std::string(1, c);
            const Field* f = fields.take(key);
            if (!f) {
                if (n == 0) { out.push_back(Permutation()); return; }
                throw ParseError(0, "missing field '" + key + "'");
            }
            out.push_back(Permutation(parse_total_map(*f, n)));
        };
        table("delta+", a.plus_count, a.delta_plus);
        table("delta-", a.minus_count, a.delta_minus);
    }

    a.left_end = PartialInjection(1 + a.minus_count, a.plus_count);
    if (const Field* f = fields.take("lend")) {
        for (const auto& tok : split_ws(f->value)) {
            auto [lhs, rhs] = split_arrow(tok, f->line);
            uint32_t slot;
            if (lhs == "q0") {
                slot = 0;
            } else {
                StateId src = parse_state_name(lhs, a.plus_count, a.minus_count, f->line);
                if (src.side != Side::minus)
                    throw ParseError(f->line, "lend source must be q0 or a minus state, got " + lhs);
                slot = 1 + src.index;
            }
            StateId dst = parse_state_name(rhs, a.plus_count, a.minus_count, f->line);
            if (dst.side != Side::plus)
                throw ParseError(f->line, "lend target must be a plus state, got " + rhs);
            if (a.left_end.defined(slot))
                throw ParseError(f->line, "lend source " + lhs + " listed twice");
            a.left_end.set(slot, dst.index);
        }
    }

    a.right_end = PartialInjection(a.plus_count, a.minus_count);
    if (const Field* f = fields.take("rend")) {
        for (const auto& tok : split_ws(f->value)) {
            auto [lhs, rhs] = split_arrow(tok, f->line);
            StateId src = parse_state_name(lhs, a.plus_count, a.minus_count, f->line);
            if (src.side != Side::plus)
                throw ParseError(f->line, "rend source must be a plus state, got " + lhs);
            StateId dst = parse_state_name(rhs, a.plus_count, a.minus_count, f->line);
            if (dst.side != Side::minus)
                throw ParseError(f->line, "rend target must be a minus state, got " + rhs);
            if (a.right_end.defined(src.index))
                throw ParseError(f->line, "rend source " + lhs + " listed twice");
            a.right_end.set(src.index, dst.index);
        }
    }

    fields.reject_unknown();
    return a;
}

inline OneWayDfa parse_dfa(std::string_view text) {
    using namespace detail;
    FieldSet fields(split_fields(text));

    const Field& type = fields.require("type");
    if (type.value != "1dfa")
        throw ParseError(type.line, "expected type 1dfa, got '" + type.value + "'");

    OneWayDfa d;
    d.alphabet = parse_alphabet(fields.require("alphabet"));
    const Field& states = fields.require("states");
    d.state_count = parse_uint(states.value, states.line, "states");

    const Field& initial = fields.require("initial");
    StateId init = parse_state_name(initial.value, d.state_count, 0, initial.line);
    d.initial = init.index;

    d.accepting.assign(d.state_count, false);
    const Field& accept = fields.require("accept");
    for (const auto& tok : split_ws(accept.value)) {
        StateId s = parse_state_name(tok, d.state_count, 0, accept.line);
        if (d.accepting[s.index]) throw ParseError(accept.line, "state " + tok + " accepted twice");
        d.accepting[s.index] = true;
    }

    for (char c : d.alphabet) {
        std::string key = "delta " + std::string(1, c);
        const Field* f = fields.take(key);
        if (!f) throw ParseError(0, "missing field '" + key + "'");
        d.delta.push_back(parse_total_map(*f, d.state_count));
    }

    fields.reject_unknown();
    return d;
}

// Dispatch on the type: line.
inline std::variant<SweepingAutomaton, OneWayDfa> parse_any(std::string_view text) {
    using namespace detail;
    FieldSet fields(split_fields(text));
    const Field& type = fields.require("type");
    if (type.value == "1dfa") return parse_dfa(text);
    if (type.value == "2perfa" || type.value == "2perfa-gen") return parse_sweeping(text);
    throw ParseError(type.line, "expected type 2perfa, 2perfa-gen or 1dfa, got '" + type.value + "'");
}

namespace detail {

inline void render_alphabet(std::ostringstream& out, const std::vector<char>& alphabet) {
    out << "alphabet:";
    for (char c : alphabet) out << ' ' << c;
    out << '\n';
}

} // namespace detail

// Canonical rendering: fixed field order, pairs listed by source index,
// fully-undefined end-marker tables omitted.  parse(render(a)) is the
// structural identity on valid automata.
inline std::string render(const SweepingAutomaton& a) {
    std::ostringstream out;
    out << "type: " << (a.flavor == Flavor::classic ? "2perfa" : "2perfa-gen") << '\n';
    detail::render_alphabet(out, a.alphabet);
    out << "qplus: " << a.plus_count << '\n';
    out << "qminus: " << a.minus_count << '\n';
    out << "initial: q" << a.initial << '\n';
    out << "accept:";
    for (StateId s : a.accepting_states()) out << ' ' << s.name();
    out << '\n';
    for (size_t s = 0; s < a.alphabet.size(); ++s) {
        out << "delta+ " << a.alphabet[s] << ':';
        for (uint32_t i = 0; i < a.plus_count; ++i) out << ' ' << i << "->" << a.delta_plus[s](i);
        out << '\n';
    }
    for (size_t s = 0; s < a.alphabet.size(); ++s) {
        if (a.minus_count == 0) break;
        out << "delta- " << a.alphabet[s] << ':';
        for (uint32_t i = 0; i < a.minus_count; ++i) out << ' ' << i << "->" << a.delta_minus[s](i);
        out << '\n';
    }
    if (a.left_end.defined_count() > 0) {
        out << "lend:";
        for (uint32_t slot = 0; slot <= a.minus_count; ++slot)
            if (auto t = a.left_end(slot))
                out << ' ' << detail::left_end_slot_name(slot) << "->q" << *t;
        out << '\n';
    }
    if (a.right_end.defined_count() > 0) {
        out << "rend:";
        for (uint32_t i = 0; i < a.plus_count; ++i)
            if (auto t = a.right_end(i)) out << ' ' << 'q' << i << "->r" << *t;
        out << '\n';
    }
    return out.str();
}

// Labels are a side table, not part of the format; they are not rendered.
inline std::string render(const OneWayDfa& d) {
    std::ostringstream out;
    out << "type: 1dfa\n";
    detail::render_alphabet(out, d.alphabet);
    out << "states: " << d.state_count << '\n';
    out << "initial: q" << d.initial << '\n';
    out << "accept:";
    for (uint32_t i = 0; i < d.state_count; ++i)
        if (d.accepting[i]) out << " q" << i;
    out << '\n';
    for (size_t s = 0; s < d.alphabet.size(); ++s) {
        out << "delta " << d.alphabet[s] << ':';
        for (uint32_t i = 0; i < d.state_count; ++i) out << ' ' << i << "->" << d.delta[s][i];
        out << '\n';
    }
    return out.str();
}

} // namespace sweepfa
