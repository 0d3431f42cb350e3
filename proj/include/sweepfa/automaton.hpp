#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permutation.hpp"

namespace sweepfa {

enum class Side : uint8_t { plus, minus };

// A state of a sweeping automaton: q0..q_{k-1} move right, r0..r_{l-1} move
// left.  Indices are dense; the printable name carries the side.
struct StateId {
    Side side = Side::plus;
    uint32_t index = 0;

    std::string name() const {
        return (side == Side::plus ? "q" : "r") + std::to_string(index);
    }

    bool operator==(const StateId&) const = default;
    auto operator<=>(const StateId&) const = default;
};

enum class Flavor : uint8_t {
    classic,      // acceptance only at the right end-marker, in plus states
    generalized,  // minus states may additionally accept at the left end-marker
};

// Sweeping permutation automaton over a single-character alphabet.
//
// The head reads the tape |-w-| and reverses only at the end-markers: plus
// states consume a symbol moving right via delta_plus, minus states moving
// left via delta_minus, and both tables are per-symbol bijections on their
// side.  left_end folds the two sources of rightward sweeps into one partial
// injection: slot 0 is the initial state standing on |-, slots 1..l are the
// minus states r0..r_{l-1}; injectivity is required across the whole domain.
// right_end maps plus states standing on -| to minus states.
struct SweepingAutomaton {
    std::vector<char> alphabet;
    uint32_t plus_count = 0;
    uint32_t minus_count = 0;
    uint32_t initial = 0;                  // index into the plus side
    std::vector<Permutation> delta_plus;   // one per alphabet symbol
    std::vector<Permutation> delta_minus;  // one per alphabet symbol
    PartialInjection left_end;             // domain 1+minus_count -> plus_count
    PartialInjection right_end;            // domain plus_count -> minus_count
    std::vector<bool> accept_plus;         // size plus_count
    std::vector<bool> accept_minus;        // size minus_count
    Flavor flavor = Flavor::classic;

    std::optional<uint32_t> symbol_index(char c) const {
        for (uint32_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == c) return i;
        return std::nullopt;
    }

    bool is_accepting(StateId s) const {
        return s.side == Side::plus ? accept_plus[s.index] : accept_minus[s.index];
    }

    // Minus states that neither accept at the left end-marker nor re-enter
    // through it: a leftward sweep reaching |- in one of these dies.
    uint32_t unused_minus_count() const {
        uint32_t n = 0;
        for (uint32_t r = 0; r < minus_count; ++r)
            n += !left_end.defined(1 + r) && !accept_minus[r];
        return n;
    }

    uint32_t accepting_minus_count() const {
        uint32_t n = 0;
        for (uint32_t r = 0; r < minus_count; ++r) n += accept_minus[r];
        return n;
    }

    std::vector<StateId> accepting_states() const {
        std::vector<StateId> out;
        for (uint32_t i = 0; i < plus_count; ++i)
            if (accept_plus[i]) out.push_back({Side::plus, i});
        for (uint32_t i = 0; i < minus_count; ++i)
            if (accept_minus[i]) out.push_back({Side::minus, i});
        return out;
    }

    bool operator==(const SweepingAutomaton&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

// Source name for a left_end slot: slot 0 is the initial state, the rest are
// minus states.
inline std::string left_end_slot_name(uint32_t slot) {
    return slot == 0 ? "q0" : "r" + std::to_string(slot - 1);
}

inline void check_partial_injection(const PartialInjection& p, const char* table,
                                    uint32_t expected_domain, uint32_t expected_codomain,
                                    bool left_slots, const char* target_prefix,
                                    std::vector<std::string>& out) {
    if (p.domain() != expected_domain || p.codomain != expected_codomain) {
        out.push_back(std::string(table) + " has wrong domain");
        return;
    }
    std::vector<bool> seen(p.codomain, false);
    for (uint32_t i = 0; i < p.domain(); ++i) {
        auto t = p(i);
        if (!t) continue;
        std::string src = left_slots ? left_end_slot_name(i) : "q" + std::to_string(i);
        if (*t >= p.codomain) {
            out.push_back(std::string(table) + " target out of range (from " + src + ")");
        } else if (seen[*t]) {
            out.push_back(std::string(table) + " not injective: target " + target_prefix +
                          std::to_string(*t) + " hit twice");
        } else {
            seen[*t] = true;
        }
    }
}

} // namespace detail

// Report-style validation: accepts arbitrary raw objects and lists every
// violated invariant.  Everything else in the library assumes ok().
inline ValidationReport validate(const SweepingAutomaton& a) {
    ValidationReport rep;
    auto bad = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

    for (size_t i = 0; i < a.alphabet.size(); ++i)
        for (size_t j = i + 1; j < a.alphabet.size(); ++j)
            if (a.alphabet[i] == a.alphabet[j]) {
                bad(std::string("duplicate alphabet symbol ") + a.alphabet[i]);
                break;
            }

    if (a.plus_count == 0) bad("no right-moving states");
    else if (a.initial >= a.plus_count) bad("initial state out of range");

    auto check_table = [&](const std::vector<Permutation>& table, uint32_t side_size,
                           const char* name) {
        if (table.size() != a.alphabet.size()) {
            bad(std::string(name) + " table does not cover the alphabet");
            return;
        }
        for (size_t s = 0; s < table.size(); ++s) {
            if (table[s].size() != side_size)
                bad(std::string(name) + " " + a.alphabet[s] + " has wrong domain");
            else if (!table[s].is_bijection())
                bad(std::string(name) + " " + a.alphabet[s] + " not bijective");
        }
    };
    check_table(a.delta_plus, a.plus_count, "delta+");
    check_table(a.delta_minus, a.minus_count, "delta-");

    detail::check_partial_injection(a.left_end, "lend", 1 + a.minus_count, a.plus_count,
                                    true, "q", rep.violations);
    detail::check_partial_injection(a.right_end, "rend", a.plus_count, a.minus_count,
                                    false, "r", rep.violations);

    if (a.accept_plus.size() != a.plus_count || a.accept_minus.size() != a.minus_count) {
        bad("accept mask has wrong size");
        return rep;
    }
    if (a.right_end.domain() == a.plus_count) {
        for (uint32_t i = 0; i < a.plus_count; ++i)
            if (a.accept_plus[i] && a.right_end.defined(i))
                bad("rend defined on accepting state q" + std::to_string(i));
    }
    for (uint32_t i = 0; i < a.minus_count; ++i) {
        if (!a.accept_minus[i]) continue;
        if (a.flavor == Flavor::classic)
            bad("minus state r" + std::to_string(i) + " cannot accept in classic mode");
        else if (a.left_end.domain() == 1 + a.minus_count && a.left_end.defined(1 + i))
            bad("lend defined on accepting state r" + std::to_string(i));
    }
    return rep;
}

} // namespace sweepfa
