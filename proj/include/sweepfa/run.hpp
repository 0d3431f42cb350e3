#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "automaton.hpp"

namespace sweepfa {

// Head position over the tape |-w-|: 0 is the left end-marker, i in 1..|w|
// is the i-th input symbol, |w|+1 is the right end-marker.
struct Configuration {
    StateId state;
    uint32_t position = 0;

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;
};

enum class RejectSite : uint8_t { at_right, at_left };

struct RunResult {
    bool accepted = false;
    std::optional<RejectSite> reject_site;      // set iff rejected
    std::vector<Configuration> trace;           // filled only when requested
};

enum class Trace : uint8_t { off, on };

// Exact simulation of one run.  pre: validate(a).ok().
//
// A valid automaton visits each configuration at most once, so the number of
// visited configurations is bounded by (plus+minus)*(|w|+2); exceeding that
// bound means the transition tables were not the bijections the rest of the
// machinery relies on, and is reported as a logic error rather than a reject.
inline RunResult run(const SweepingAutomaton& a, std::string_view word, Trace want = Trace::off) {
    std::vector<uint32_t> syms(word.size());
    for (size_t i = 0; i < word.size(); ++i) {
        auto s = a.symbol_index(word[i]);
        if (!s) throw std::invalid_argument(std::string("symbol ") + word[i] + " not in alphabet");
        syms[i] = *s;
    }

    const uint32_t n = static_cast<uint32_t>(word.size());
    const uint64_t bound =
        static_cast<uint64_t>(a.plus_count + a.minus_count) * (static_cast<uint64_t>(n) + 2);
    uint64_t visited = 0;

    RunResult result;
    Configuration cur{{Side::plus, a.initial}, 0};
    auto visit = [&](Configuration c) {
        if (++visited > bound)
            throw std::logic_error("run exceeded the configuration bound; transition tables are not permutations");
        if (want == Trace::on) result.trace.push_back(c);
        cur = c;
    };
    auto accept = [&]() { result.accepted = true; };
    auto reject = [&](RejectSite site) { result.reject_site = site; };

    visit(cur);
    // Leaving the left end-marker in the initial state.
    if (auto t = a.left_end(0); t.has_value()) {
        visit({{Side::plus, *t}, 1});
    } else {
        reject(RejectSite::at_left);
        return result;
    }

    while (true) {
        if (cur.state.side == Side::plus) {
            if (cur.position == n + 1) {
                if (a.accept_plus[cur.state.index]) { accept(); return result; }
                auto t = a.right_end(cur.state.index);
                if (!t) { reject(RejectSite::at_right); return result; }
                visit({{Side::minus, *t}, n});
            } else {
                uint32_t next = a.delta_plus[syms[cur.position - 1]](cur.state.index);
                visit({{Side::plus, next}, cur.position + 1});
            }
        } else {
            if (cur.position == 0) {
                if (a.flavor == Flavor::generalized && a.accept_minus[cur.state.index]) {
                    accept();
                    return result;
                }
                auto t = a.left_end(1 + cur.state.index);
                if (!t) { reject(RejectSite::at_left); return result; }
                visit({{Side::plus, *t}, 1});
            } else {
                uint32_t next = a.delta_minus[syms[cur.position - 1]](cur.state.index);
                visit({{Side::minus, next}, cur.position - 1});
            }
        }
    }
}

} // namespace sweepfa
