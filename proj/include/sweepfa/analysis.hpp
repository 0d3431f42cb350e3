#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dfa.hpp"
#include "errors.hpp"
#include "run.hpp"

namespace sweepfa {

// Minimal complete DFA for the same language: unreachable states dropped,
// states merged by iterated refinement of the acceptance partition, and the
// result renumbered breadth-first from the initial state in alphabet order
// (so equal languages over equal alphabets yield byte-identical renderings).
// Labels do not survive: a minimized state is a class, not a single (q,f).
// pre: validate(d).ok().
inline OneWayDfa minimize(const OneWayDfa& d) {
    const uint32_t syms = static_cast<uint32_t>(d.alphabet.size());

    // Reachable restriction.
    std::vector<uint32_t> order;                       // BFS discovery
    std::vector<int64_t> compact(d.state_count, -1);   // old -> reachable slot
    order.push_back(d.initial);
    compact[d.initial] = 0;
    for (uint32_t head = 0; head < order.size(); ++head)
        for (uint32_t s = 0; s < syms; ++s) {
            uint32_t t = d.delta[s][order[head]];
            if (compact[t] < 0) {
                compact[t] = static_cast<int64_t>(order.size());
                order.push_back(t);
            }
        }
    const uint32_t n = static_cast<uint32_t>(order.size());

    std::vector<std::vector<uint32_t>> delta(syms, std::vector<uint32_t>(n));
    std::vector<bool> accepting(n);
    for (uint32_t i = 0; i < n; ++i) {
        accepting[i] = d.accepting[order[i]];
        for (uint32_t s = 0; s < syms; ++s)
            delta[s][i] = static_cast<uint32_t>(compact[d.delta[s][order[i]]]);
    }

    // Refinement: split blocks by (own block, successor blocks) signatures
    // until stable.
    std::vector<uint32_t> block(n);
    for (uint32_t i = 0; i < n; ++i) block[i] = accepting[i] ? 1 : 0;
    uint32_t block_count = 2;
    while (true) {
        std::map<std::vector<uint32_t>, uint32_t> fresh;
        std::vector<uint32_t> next(n);
        std::vector<uint32_t> sig(syms + 1);
        for (uint32_t i = 0; i < n; ++i) {
            sig[0] = block[i];
            for (uint32_t s = 0; s < syms; ++s) sig[s + 1] = block[delta[s][i]];
            next[i] = fresh.emplace(sig, static_cast<uint32_t>(fresh.size())).first->second;
        }
        uint32_t next_count = static_cast<uint32_t>(fresh.size());
        block.swap(next);
        if (next_count == block_count) break;
        block_count = next_count;
    }

    // Canonical numbering of the quotient.
    std::vector<int64_t> renum(block_count, -1);
    std::vector<uint32_t> rep;  // block (new id) -> representative state
    renum[block[0]] = 0;
    rep.push_back(0);
    for (uint32_t head = 0; head < rep.size(); ++head)
        for (uint32_t s = 0; s < syms; ++s) {
            uint32_t t = delta[s][rep[head]];
            uint32_t b = block[t];
            if (renum[b] < 0) {
                renum[b] = static_cast<int64_t>(rep.size());
                rep.push_back(t);
            }
        }

    OneWayDfa out;
    out.alphabet = d.alphabet;
    out.state_count = static_cast<uint32_t>(rep.size());
    out.initial = 0;
    out.delta.assign(syms, std::vector<uint32_t>(out.state_count));
    out.accepting.resize(out.state_count);
    for (uint32_t i = 0; i < out.state_count; ++i) {
        out.accepting[i] = accepting[rep[i]];
        for (uint32_t s = 0; s < syms; ++s)
            out.delta[s][i] = static_cast<uint32_t>(renum[block[delta[s][rep[i]]]]);
    }
    return out;
}

struct EquivalenceVerdict {
    bool equal = false;
    std::optional<std::string> counterexample;  // a shortest separating string
};

// Product-construction equivalence with a shortest counterexample (ties
// broken by alphabet order, courtesy of breadth-first search).
// pre: both valid; throws std::invalid_argument on an alphabet mismatch.
inline EquivalenceVerdict equivalent(const OneWayDfa& x, const OneWayDfa& y) {
    if (x.alphabet != y.alphabet) throw std::invalid_argument("alphabets differ");
    const uint32_t syms = static_cast<uint32_t>(x.alphabet.size());

    struct Visit {
        int64_t parent;  // index into the BFS order, -1 for the root
        char via;
    };
    auto key = [&](uint32_t a, uint32_t b) {
        return static_cast<uint64_t>(a) * y.state_count + b;
    };
    std::unordered_map<uint64_t, uint32_t> seen;  // pair key -> BFS index
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    std::vector<Visit> visits;

    auto rebuild = [&](uint32_t at) {
        std::string w;
        for (int64_t i = at; visits[i].parent >= 0; i = visits[i].parent)
            w.push_back(visits[i].via);
        std::reverse(w.begin(), w.end());
        return w;
    };

    pairs.emplace_back(x.initial, y.initial);
    visits.push_back({-1, 0});
    seen.emplace(key(x.initial, y.initial), 0);
    for (uint32_t head = 0; head < pairs.size(); ++head) {
        auto [a, b] = pairs[head];
        if (x.accepting[a] != y.accepting[b])
            return {false, rebuild(head)};
        for (uint32_t s = 0; s < syms; ++s) {
            uint32_t na = x.delta[s][a], nb = y.delta[s][b];
            if (seen.emplace(key(na, nb), static_cast<uint32_t>(pairs.size())).second) {
                pairs.emplace_back(na, nb);
                visits.push_back({static_cast<int64_t>(head), x.alphabet[s]});
            }
        }
    }
    return {true, std::nullopt};
}

namespace detail {

inline uint64_t count_strings_up_to(size_t alphabet_size, uint32_t max_len, uint64_t cap) {
    uint64_t total = 0, layer = 1;
    for (uint32_t len = 0; len <= max_len; ++len) {
        total += layer;
        if (total > cap) return total;
        if (layer > cap) return cap + 1;
        layer *= alphabet_size == 0 ? 0 : alphabet_size;
    }
    return total;
}

template <typename Accepts>
std::vector<std::string> enumerate_accepted(const std::vector<char>& alphabet, uint32_t max_len,
                                            uint64_t budget, Accepts&& accepts_word) {
    if (count_strings_up_to(alphabet.size(), max_len, budget) > budget)
        throw ResourceLimitError("bounded language enumeration exceeds the string budget");
    std::vector<std::string> out;
    std::string word;
    auto walk = [&](auto&& self) -> void {
        if (accepts_word(word)) out.push_back(word);
        if (word.size() == max_len) return;
        for (char c : alphabet) {
            word.push_back(c);
            self(self);
            word.pop_back();
        }
    };
    walk(walk);
    // Length-major, then alphabet order (the recursion yields prefix order).
    std::vector<uint32_t> rank(256, 0);
    for (uint32_t i = 0; i < alphabet.size(); ++i)
        rank[static_cast<unsigned char>(alphabet[i])] = i;
    std::stable_sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return rank[static_cast<unsigned char>(a[i])] < rank[static_cast<unsigned char>(b[i])];
        return false;
    });
    return out;
}

} // namespace detail

// Every accepted string of length <= max_len, decided by walking the DFA.
inline std::vector<std::string> bounded_language(const OneWayDfa& d, uint32_t max_len,
                                                 uint64_t budget = 2'000'000) {
    return detail::enumerate_accepted(d.alphabet, max_len, budget,
                                      [&](const std::string& w) { return accepts(d, w); });
}

// Same, decided by direct sweeping simulation — deliberately independent of
// the one-way construction so the two can cross-check each other.
inline std::vector<std::string> bounded_language(const SweepingAutomaton& a, uint32_t max_len,
                                                 uint64_t budget = 2'000'000) {
    return detail::enumerate_accepted(a.alphabet, max_len, budget,
                                      [&](const std::string& w) { return run(a, w).accepted; });
}

struct MinimalPermutationCheck {
    uint32_t states_before = 0;
    uint32_t states_after = 0;
    bool minimal_is_permutation = false;
};

// Minimize and test whether minimality preserved the permutation property.
inline MinimalPermutationCheck check_minimal_permutation(const OneWayDfa& d) {
    OneWayDfa m = minimize(d);
    return {d.state_count, m.state_count, is_permutation_dfa(m)};
}

} // namespace sweepfa
