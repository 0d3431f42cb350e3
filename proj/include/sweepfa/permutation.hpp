#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sweepfa {

// Total map on {0,...,n-1}.  Bijectivity is a validity condition rather than
// a construction invariant: broken tables must survive long enough for
// validation to describe what is wrong with them.
struct Permutation {
    std::vector<uint32_t> targets;

    Permutation() = default;
    explicit Permutation(std::vector<uint32_t> t) : targets(std::move(t)) {}

    static Permutation identity(uint32_t n) {
        std::vector<uint32_t> t(n);
        for (uint32_t i = 0; i < n; ++i) t[i] = i;
        return Permutation(std::move(t));
    }

    // i -> i+1 (mod n); the identity for n <= 1.
    static Permutation cycle(uint32_t n) {
        std::vector<uint32_t> t(n);
        for (uint32_t i = 0; i < n; ++i) t[i] = (i + 1 == n) ? 0 : i + 1;
        return Permutation(std::move(t));
    }

    static Permutation transposition(uint32_t n, uint32_t i, uint32_t j) {
        if (i >= n || j >= n) throw std::invalid_argument("transposition point out of range");
        Permutation p = identity(n);
        std::swap(p.targets[i], p.targets[j]);
        return p;
    }

    uint32_t size() const { return static_cast<uint32_t>(targets.size()); }
    uint32_t operator()(uint32_t i) const { return targets[i]; }

    bool is_bijection() const {
        std::vector<bool> seen(targets.size(), false);
        for (uint32_t v : targets) {
            if (v >= targets.size() || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }

    // pre: is_bijection()
    Permutation inverse() const {
        std::vector<uint32_t> t(targets.size());
        for (uint32_t i = 0; i < size(); ++i) t[targets[i]] = i;
        return Permutation(std::move(t));
    }

    // Apply this first, then g: result(x) = g(this(x)).
    Permutation then(const Permutation& g) const {
        if (g.size() != size()) throw std::invalid_argument("permutation sizes differ");
        std::vector<uint32_t> t(targets.size());
        for (uint32_t i = 0; i < size(); ++i) t[i] = g(targets[i]);
        return Permutation(std::move(t));
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;
};

// Partial map {0,...,domain-1} -> {0,...,codomain-1}.  As above, injectivity
// and range membership are validity conditions, not construction invariants.
struct PartialInjection {
    std::vector<std::optional<uint32_t>> targets;
    uint32_t codomain = 0;

    PartialInjection() = default;
    PartialInjection(uint32_t domain, uint32_t codomain_)
        : targets(domain, std::nullopt), codomain(codomain_) {}

    uint32_t domain() const { return static_cast<uint32_t>(targets.size()); }
    bool defined(uint32_t i) const { return targets[i].has_value(); }
    std::optional<uint32_t> operator()(uint32_t i) const { return targets[i]; }

    void set(uint32_t i, uint32_t v) { targets[i] = v; }
    void unset(uint32_t i) { targets[i] = std::nullopt; }

    uint32_t defined_count() const {
        uint32_t n = 0;
        for (const auto& t : targets) n += t.has_value();
        return n;
    }

    bool is_valid() const {
        std::vector<bool> seen(codomain, false);
        for (const auto& t : targets) {
            if (!t) continue;
            if (*t >= codomain || seen[*t]) return false;
            seen[*t] = true;
        }
        return true;
    }

    bool operator==(const PartialInjection&) const = default;
};

} // namespace sweepfa
