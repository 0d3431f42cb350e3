#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "errors.hpp"
#include "transform.hpp"

namespace sweepfa {

struct WitnessParams {
    uint32_t k = 0;  // plus states
    uint32_t l = 0;  // minus states
    uint32_t m = 0;  // minus states left without a left end-marker transition
};

// A (k,l,m)-shaped automaton whose equivalent one-way automata all need the
// full state count of the construction, i.e. minimization gains nothing.
//
// Over Σ = {a,b,c,d}: a cycles the plus side, b swaps q0/q1, c cycles the
// minus side, d swaps r0/r1 — so {a,b} generate every permutation of the
// plus side and {c,d} every permutation of the minus side, while each pair
// leaves the other side alone.  The end-markers wire q0 back to itself,
// r_i forward to q_{i+1} for i < l-m, and q_i down to r_i for i < l; the
// plus states beyond l accept.
//
// The worst-case guarantee holds for k > l > 0 and l >= m > 0; outside that
// range pass force=true to build the automaton anyway (no minimality
// promise, but the shape constraints k >= 1, m <= l, l-m <= k-1 must still
// admit an injective left end-marker table).
//
// Forced m = 0 gets one adjustment: with every r_i wired back in, the sweep
// chain always runs to completion, so accepting all of q_l..q_{k-1} would
// accept every string outright.  Demoting q_l keeps the chain's endpoint
// observable, and measured minimal sizes then match the m = 0 count.
inline SweepingAutomaton build_witness(const WitnessParams& p, bool force = false) {
    if (!force && !(p.k > p.l && p.l > 0 && p.m > 0 && p.m <= p.l))
        throw std::invalid_argument("witness shape requires k > l > 0 and l >= m > 0 (force to override)");
    if (p.k < 1 || p.m > p.l || p.l - p.m > p.k - 1)
        throw std::invalid_argument("witness shape requires k >= 1, m <= l and l-m <= k-1");

    SweepingAutomaton a;
    a.alphabet = {'a', 'b', 'c', 'd'};
    a.plus_count = p.k;
    a.minus_count = p.l;
    a.initial = 0;
    a.flavor = Flavor::classic;

    auto swap01 = [](uint32_t n) {
        return n >= 2 ? Permutation::transposition(n, 0, 1) : Permutation::identity(n);
    };
    a.delta_plus = {Permutation::cycle(p.k), swap01(p.k),
                    Permutation::identity(p.k), Permutation::identity(p.k)};
    a.delta_minus = {Permutation::identity(p.l), Permutation::identity(p.l),
                     Permutation::cycle(p.l), swap01(p.l)};

    a.left_end = PartialInjection(1 + p.l, p.k);
    a.left_end.set(0, 0);
    for (uint32_t i = 0; i + p.m < p.l; ++i) a.left_end.set(1 + i, i + 1);

    a.right_end = PartialInjection(p.k, p.l);
    for (uint32_t i = 0; i < p.l; ++i) a.right_end.set(i, i);

    a.accept_plus.assign(p.k, false);
    a.accept_minus.assign(p.l, false);
    for (uint32_t i = p.l + (p.m == 0 ? 1 : 0); i < p.k; ++i) a.accept_plus[i] = true;
    return a;
}

namespace detail {

// Permutations on up to 16 points pack into a u64, 4 bits a point.
inline uint64_t pack_permutation(const Permutation& p) {
    uint64_t enc = 0;
    for (uint32_t i = 0; i < p.size(); ++i) enc |= static_cast<uint64_t>(p(i)) << (4 * i);
    return enc;
}

} // namespace detail

// A shortest word over the generator names whose left-to-right application
// equals target (breadth-first over the generated group, generators tried
// in the given order, so ties resolve to the earliest-listed names).
//
// Throws std::invalid_argument for mixed sizes or more than 16 points,
// ResourceLimitError past the group-size budget, std::runtime_error when
// the generators do not produce the target at all.
inline std::string word_for_permutation(const std::vector<std::pair<char, Permutation>>& generators,
                                        const Permutation& target, uint64_t budget = 3'628'800) {
    const uint32_t n = target.size();
    if (n > 16) throw std::invalid_argument("word search supports at most 16 points");
    for (const auto& [name, g] : generators)
        if (g.size() != n) throw std::invalid_argument("generator size differs from target size");

    const uint64_t target_key = detail::pack_permutation(target);
    struct Visit {
        int64_t parent;
        char via;
    };
    std::vector<uint64_t> order;
    std::vector<Visit> visits;
    std::unordered_map<uint64_t, uint32_t> seen;

    Permutation id = Permutation::identity(n);
    order.push_back(detail::pack_permutation(id));
    visits.push_back({-1, 0});
    seen.emplace(order[0], 0);

    auto unpack = [&](uint64_t enc) {
        std::vector<uint32_t> t(n);
        for (uint32_t i = 0; i < n; ++i) t[i] = static_cast<uint32_t>((enc >> (4 * i)) & 0xF);
        return Permutation(std::move(t));
    };

    for (uint32_t head = 0; head < order.size(); ++head) {
        if (order[head] == target_key) {
            std::string w;
            for (int64_t i = head; visits[i].parent >= 0; i = visits[i].parent)
                w.push_back(visits[i].via);
            std::reverse(w.begin(), w.end());
            return w;
        }
        Permutation cur = unpack(order[head]);
        for (const auto& [name, g] : generators) {
            uint64_t next = detail::pack_permutation(cur.then(g));
            if (seen.emplace(next, static_cast<uint32_t>(order.size())).second) {
                if (order.size() >= budget)
                    throw ResourceLimitError("word search exceeded the group-size budget");
                order.push_back(next);
                visits.push_back({static_cast<int64_t>(head), name});
            }
        }
    }
    throw std::runtime_error("target permutation is not generated");
}

// A string accepted from exactly one of two one-way states of a's
// transformation — in other words, evidence that the two states are not
// mergeable.  Breadth-first product walk, so a shortest string comes back;
// nullopt when the states are equivalent.  pre: both states structurally
// sound for a; throws std::invalid_argument when s == t.
inline std::optional<std::string> separating_string(const SweepingAutomaton& a,
                                                    const TransformedState& s,
                                                    const TransformedState& t) {
    if (s == t) throw std::invalid_argument("states are identical");

    struct Visit {
        int64_t parent;
        char via;
    };
    std::vector<std::pair<TransformedState, TransformedState>> order;
    std::vector<Visit> visits;
    std::map<std::pair<TransformedState, TransformedState>, uint32_t> seen;

    order.emplace_back(s, t);
    visits.push_back({-1, 0});
    seen.emplace(order[0], 0);
    for (uint32_t head = 0; head < order.size(); ++head) {
        auto [u, v] = order[head];
        if (is_accepting(a, u) != is_accepting(a, v)) {
            std::string w;
            for (int64_t i = head; visits[i].parent >= 0; i = visits[i].parent)
                w.push_back(visits[i].via);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
            auto next = std::make_pair(step_transformed_state(a, u, sym),
                                       step_transformed_state(a, v, sym));
            if (seen.emplace(next, static_cast<uint32_t>(order.size())).second) {
                order.push_back(std::move(next));
                visits.push_back({static_cast<int64_t>(head), a.alphabet[sym]});
            }
        }
    }
    return std::nullopt;
}

} // namespace sweepfa
