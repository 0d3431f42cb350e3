#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "automaton.hpp"

namespace sweepfa {

// Complete one-way DFA.  A one-way permutation automaton is the same type
// restricted by is_permutation_dfa().
struct OneWayDfa {
    std::vector<char> alphabet;
    uint32_t state_count = 0;
    uint32_t initial = 0;
    std::vector<std::vector<uint32_t>> delta;  // [symbol][state] -> state
    std::vector<bool> accepting;               // size state_count
    std::vector<std::string> labels;           // empty, or one per state

    std::optional<uint32_t> symbol_index(char c) const {
        for (uint32_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == c) return i;
        return std::nullopt;
    }

    bool operator==(const OneWayDfa&) const = default;
};

inline ValidationReport validate(const OneWayDfa& d) {
    ValidationReport rep;
    auto bad = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

    for (size_t i = 0; i < d.alphabet.size(); ++i)
        for (size_t j = i + 1; j < d.alphabet.size(); ++j)
            if (d.alphabet[i] == d.alphabet[j]) {
                bad(std::string("duplicate alphabet symbol ") + d.alphabet[i]);
                break;
            }
    if (d.state_count == 0) bad("no states");
    else if (d.initial >= d.state_count) bad("initial state out of range");
    if (d.delta.size() != d.alphabet.size()) {
        bad("delta table does not cover the alphabet");
    } else {
        for (size_t s = 0; s < d.delta.size(); ++s) {
            if (d.delta[s].size() != d.state_count) {
                bad(std::string("delta ") + d.alphabet[s] + " has wrong domain");
                continue;
            }
            for (uint32_t v : d.delta[s])
                if (v >= d.state_count) {
                    bad(std::string("delta ") + d.alphabet[s] + " target out of range");
                    break;
                }
        }
    }
    if (d.accepting.size() != d.state_count) bad("accept mask has wrong size");
    if (!d.labels.empty() && d.labels.size() != d.state_count) bad("label table has wrong size");
    return rep;
}

// True iff every symbol permutes the full state set.
inline bool is_permutation_dfa(const OneWayDfa& d) {
    for (const auto& row : d.delta) {
        if (row.size() != d.state_count) return false;
        std::vector<bool> seen(d.state_count, false);
        for (uint32_t v : row) {
            if (v >= d.state_count || seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

// pre: validate(d).ok()
inline bool accepts(const OneWayDfa& d, std::string_view word) {
    uint32_t state = d.initial;
    for (char c : word) {
        auto s = d.symbol_index(c);
        if (!s) throw std::invalid_argument(std::string("symbol ") + c + " not in alphabet");
        state = d.delta[*s][state];
    }
    return d.accepting[state];
}

} // namespace sweepfa
