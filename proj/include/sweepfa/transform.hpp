#pragma once

#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "dfa.hpp"
#include "run.hpp"

namespace sweepfa {

// One-way view of a sweeping automaton.
//
// After consuming a prefix u, everything the sweeping automaton can still do
// is determined by two things: the state in which it first walks off the
// right edge of |-u (leave_state), and, for every left-moving state r, what
// becomes of a sweep that re-enters u from the right in r (reentry[r]).  A
// re-entry either emerges on the right again in some plus state — recorded as
// that state's index — or dies at the left end-marker, recorded as one of the
// sentinels below.  Tracking the pair (leave_state, reentry) under symbol
// appends is a deterministic one-way computation, and that is the automaton
// built here.
//
// reentry values: a plus-state index, or
//   reentry_undef  — the sweep reaches |- with no way out and no verdict
//                    (classic flavor only);
//   reentry_accept — the sweep accepts at |- (generalized flavor);
//   reentry_reject — the sweep rejects at |- (generalized flavor).
inline constexpr int32_t reentry_undef = -3;
inline constexpr int32_t reentry_accept = -2;
inline constexpr int32_t reentry_reject = -1;

struct TransformedState {
    uint32_t leave_state = 0;
    std::vector<int32_t> reentry;  // dense over the minus side

    bool operator==(const TransformedState&) const = default;
    auto operator<=>(const TransformedState&) const = default;
};

// "(q1;r0->q2,r1->-)"; sentinels render as "-", "ACC", "REJ".
inline std::string state_label(const TransformedState& s) {
    std::string out = "(q" + std::to_string(s.leave_state) + ";";
    for (size_t r = 0; r < s.reentry.size(); ++r) {
        if (r > 0) out += ',';
        out += "r" + std::to_string(r) + "->";
        switch (s.reentry[r]) {
            case reentry_undef: out += '-'; break;
            case reentry_accept: out += "ACC"; break;
            case reentry_reject: out += "REJ"; break;
            default: out += "q" + std::to_string(s.reentry[r]);
        }
    }
    out += ')';
    return out;
}

// The whole construction is empty when the very first sweep cannot start.
inline bool has_empty_initial_sweep(const SweepingAutomaton& a) {
    return !a.left_end.defined(0);
}

// Structural soundness of a transformed state: the defined part of reentry is
// injective into the plus side and avoids leave_state, and the sentinel
// counts match the automaton (unused minus states and, for the generalized
// flavor, accepting minus states are fixed once and for all — symbols only
// permute each side, so no append can create or destroy them).
inline bool is_valid_transformed_state(const SweepingAutomaton& a, const TransformedState& s) {
    if (s.leave_state >= a.plus_count) return false;
    if (s.reentry.size() != a.minus_count) return false;
    uint32_t undef = 0, acc = 0, rej = 0;
    std::vector<bool> used(a.plus_count, false);
    for (int32_t v : s.reentry) {
        if (v == reentry_undef) ++undef;
        else if (v == reentry_accept) ++acc;
        else if (v == reentry_reject) ++rej;
        else if (v < 0 || v >= static_cast<int32_t>(a.plus_count)) return false;
        else if (used[v]) return false;
        else used[v] = true;
    }
    if (used[s.leave_state]) return false;
    if (a.flavor == Flavor::classic)
        return acc == 0 && rej == 0 && undef == a.unused_minus_count();
    return undef == 0 && acc == a.accepting_minus_count() && rej == a.unused_minus_count();
}

// State after the empty prefix: the initial sweep leaves via delta_lend(q0),
// and a re-entry in r immediately meets |-.  pre: validate(a).ok().
inline TransformedState initial_transformed_state(const SweepingAutomaton& a) {
    auto start = a.left_end(0);
    if (!start) throw std::domain_error("empty initial sweep: no left end-marker transition from the initial state");
    TransformedState s;
    s.leave_state = *start;
    s.reentry.resize(a.minus_count);
    for (uint32_t r = 0; r < a.minus_count; ++r) {
        if (auto t = a.left_end(1 + r)) {
            s.reentry[r] = static_cast<int32_t>(*t);
        } else if (a.flavor == Flavor::generalized) {
            s.reentry[r] = a.accept_minus[r] ? reentry_accept : reentry_reject;
        } else {
            s.reentry[r] = reentry_undef;
        }
    }
    return s;
}

// Appending symbol c extends every tracked sweep by one cell: the leaving
// sweep advances by delta+, and a re-entry in r first steps left by delta-
// into the old prefix, then whatever emerged on the right advances by delta+.
// Sentinels are final verdicts and pass through untouched.
inline TransformedState step_transformed_state(const SweepingAutomaton& a,
                                               const TransformedState& s, uint32_t sym) {
    const Permutation& dp = a.delta_plus[sym];
    const Permutation& dm = a.delta_minus[sym];
    TransformedState out;
    out.leave_state = dp(s.leave_state);
    out.reentry.resize(s.reentry.size());
    for (uint32_t r = 0; r < s.reentry.size(); ++r) {
        int32_t v = s.reentry[dm(r)];
        out.reentry[r] = v < 0 ? v : static_cast<int32_t>(dp(static_cast<uint32_t>(v)));
    }
    return out;
}

// Verdict on the full input |-u-|: chase the sweeps that bounce off the
// right end-marker.  Starting from the leaving state, either the current
// plus state accepts; or it has no right end-marker transition and the run
// dies; or it dives back in and reentry tells us where (or whether) it
// comes back.  Each plus state can head a bounce at most once, so a repeat
// means the state was corrupt.
inline bool is_accepting(const SweepingAutomaton& a, const TransformedState& s) {
    uint32_t q = s.leave_state;
    uint32_t hops = 0;
    while (true) {
        if (++hops > a.plus_count)
            throw std::logic_error("acceptance chain revisited a state; transformed state is corrupt");
        if (a.accept_plus[q]) return true;
        auto r = a.right_end(q);
        if (!r) return false;
        int32_t v = s.reentry[*r];
        if (v == reentry_accept) return true;
        if (v == reentry_reject || v == reentry_undef) return false;
        q = static_cast<uint32_t>(v);
    }
}

// Breadth-first closure of the initial state under symbol appends, in
// alphabet order.  pre: validate(a).ok() and !has_empty_initial_sweep(a).
inline std::vector<TransformedState> reachable_state_set(const SweepingAutomaton& a) {
    TransformedState init = initial_transformed_state(a);
    std::vector<TransformedState> states{init};
    std::map<TransformedState, uint32_t> index{{init, 0}};
    for (uint32_t head = 0; head < states.size(); ++head) {
        for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym) {
            TransformedState next = step_transformed_state(a, states[head], sym);
            if (index.emplace(next, static_cast<uint32_t>(states.size())).second)
                states.push_back(std::move(next));
        }
    }
    return states;
}

// Every structurally sound state, in increasing (leave_state, reentry)
// order; closed under symbol appends and a superset of the reachable set.
inline std::vector<TransformedState> full_state_set(const SweepingAutomaton& a) {
    const uint32_t k = a.plus_count;
    const uint32_t l = a.minus_count;
    const uint32_t unused = a.unused_minus_count();
    const uint32_t accepting = a.flavor == Flavor::generalized ? a.accepting_minus_count() : 0;

    std::vector<TransformedState> states;
    TransformedState cur;
    cur.reentry.assign(l, 0);
    std::vector<bool> used(k, false);

    // Depth-first fill of reentry[pos..] with candidates tried in encoding
    // order, so states come out lexicographically sorted.
    auto emit = [&](auto&& self, uint32_t pos, uint32_t undef_left, uint32_t acc_left,
                    uint32_t rej_left) -> void {
        if (pos == l) {
            states.push_back(cur);
            return;
        }
        auto sentinel = [&](int32_t value, uint32_t& budget) {
            if (budget == 0) return;
            cur.reentry[pos] = value;
            --budget;
            self(self, pos + 1, undef_left, acc_left, rej_left);
            ++budget;
        };
        sentinel(reentry_undef, undef_left);
        sentinel(reentry_accept, acc_left);
        sentinel(reentry_reject, rej_left);
        uint32_t slots_after_sentinels = l - pos - (undef_left + acc_left + rej_left);
        if (slots_after_sentinels == 0) return;  // every remaining slot is spoken for
        for (uint32_t v = 0; v < k; ++v) {
            if (used[v] || v == cur.leave_state) continue;
            used[v] = true;
            cur.reentry[pos] = static_cast<int32_t>(v);
            self(self, pos + 1, undef_left, acc_left, rej_left);
            used[v] = false;
        }
    };

    for (uint32_t q = 0; q < k; ++q) {
        cur.leave_state = q;
        if (a.flavor == Flavor::classic)
            emit(emit, 0, unused, 0, 0);
        else
            emit(emit, 0, 0, accepting, unused);
    }
    return states;
}

enum class TransformMode : uint8_t { reachable, full };

namespace detail {

inline OneWayDfa empty_language_dfa(const std::vector<char>& alphabet) {
    OneWayDfa d;
    d.alphabet = alphabet;
    d.state_count = 1;
    d.initial = 0;
    d.delta.assign(alphabet.size(), std::vector<uint32_t>{0});
    d.accepting = {false};
    return d;
}

} // namespace detail

// The equivalent one-way automaton.  pre: validate(a).ok().
//
// reachable mode numbers states in breadth-first discovery order (initial
// state is 0); full mode numbers the complete sound state set in its
// canonical order, with the initial state somewhere inside.  When the
// initial sweep cannot start the language is empty and a fixed 1-state
// rejecting automaton stands in (callers can detect the case up front via
// has_empty_initial_sweep).
inline OneWayDfa transform(const SweepingAutomaton& a, TransformMode mode = TransformMode::reachable) {
    if (has_empty_initial_sweep(a)) return detail::empty_language_dfa(a.alphabet);

    std::vector<TransformedState> states =
        mode == TransformMode::reachable ? reachable_state_set(a) : full_state_set(a);
    std::map<TransformedState, uint32_t> index;
    for (uint32_t i = 0; i < states.size(); ++i) {
        if (!is_valid_transformed_state(a, states[i]))
            throw std::logic_error("transform produced a structurally unsound state");
        index.emplace(states[i], i);
    }

    OneWayDfa d;
    d.alphabet = a.alphabet;
    d.state_count = static_cast<uint32_t>(states.size());
    d.initial = index.at(initial_transformed_state(a));
    d.delta.assign(a.alphabet.size(), std::vector<uint32_t>(states.size(), 0));
    d.accepting.resize(states.size());
    d.labels.resize(states.size());
    for (uint32_t i = 0; i < states.size(); ++i) {
        for (uint32_t sym = 0; sym < a.alphabet.size(); ++sym)
            d.delta[sym][i] = index.at(step_transformed_state(a, states[i], sym));
        d.accepting[i] = is_accepting(a, states[i]);
        d.labels[i] = state_label(states[i]);
    }
    return d;
}

} // namespace sweepfa
