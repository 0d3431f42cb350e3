#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace sweepfa {

using BigNat = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_bin_float_50;

namespace detail {

inline BigNat factorial(uint32_t n) {
    BigNat f = 1;
    for (uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigNat binomial(uint32_t n, uint32_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    BigNat v = 1;
    for (uint32_t i = 1; i <= r; ++i) {
        v *= n - r + i;
        v /= i;  // exact: v is a running binomial
    }
    return v;
}

inline void check_shape(uint32_t k, uint32_t l, uint32_t m) {
    if (k < 1) throw std::domain_error("shape requires k >= 1");
    if (m > l) throw std::domain_error("shape requires m <= l");
    if (l - m > k - 1) throw std::domain_error("shape requires l-m <= k-1");
}

} // namespace detail

// Exact one-way state count for a (k,l,m)-shaped sweeping permutation
// automaton: k * C(l,m) * C(k-1,l-m) * (l-m)!.
inline BigNat transform_size(uint32_t k, uint32_t l, uint32_t m) {
    detail::check_shape(k, l, m);
    return BigNat(k) * detail::binomial(l, m) * detail::binomial(k - 1, l - m) *
           detail::factorial(l - m);
}

// The same count as a ratio of factorials: k! l! / ((k-1-l+m)! m! (l-m)!).
inline BigNat transform_size_factorial_form(uint32_t k, uint32_t l, uint32_t m) {
    detail::check_shape(k, l, m);
    return detail::factorial(k) * detail::factorial(l) /
           (detail::factorial(k - 1 - l + m) * detail::factorial(m) * detail::factorial(l - m));
}

// Generalized-flavor count: of the m minus states with no way back in,
// e accept at the left end-marker: k * C(l,m) * C(m,e) * C(k-1,l-m) * (l-m)!.
inline BigNat generalized_count(uint32_t k, uint32_t l, uint32_t m, uint32_t e) {
    detail::check_shape(k, l, m);
    if (e > m) throw std::domain_error("shape requires e <= m");
    return transform_size(k, l, m) * detail::binomial(m, e);
}

struct OptimalTriple {
    uint32_t k = 0, l = 0, m = 0;
    BigNat value;
};

// Brute-force maximum of transform_size over all shapes with k+l = n.
// Ties go to larger k, then smaller m.
inline OptimalTriple worst_case(uint32_t n) {
    if (n < 1) throw std::domain_error("worst_case requires n >= 1");
    OptimalTriple best;
    for (uint32_t k = 1; k <= n; ++k) {
        const uint32_t l = n - k;
        const uint32_t m0 = l + 1 > k ? l + 1 - k : 0;
        BigNat g = transform_size(k, l, m0);
        for (uint32_t m = m0;; ++m) {
            // Ties go to larger k (k ascends, so replace on equal value),
            // then smaller m (m ascends within k, so keep the first).
            if (g > best.value || (g == best.value && k > best.k)) best = {k, l, m, g};
            if (m == l) break;
            // Ratio of consecutive counts in m; division is exact.
            g = g * (l - m) / (BigNat(m + 1) * (k - l + m));
        }
    }
    return best;
}

// Closed-form best m for a given split: ceil((sqrt(D) + l - k - 2) / 2) with
// D = (k-l)^2 + 4(l+1), clamped into the admissible range.  The integer
// ceiling is computed exactly: start at ceil((isqrt(D) + c) / 2) and bump
// until 2t - c actually clears sqrt(D).
inline uint32_t optimal_m(uint32_t k, uint32_t l) {
    if (k < 1) throw std::domain_error("optimal_m requires k >= 1");
    const int64_t diff = static_cast<int64_t>(k) - static_cast<int64_t>(l);
    const int64_t d = diff * diff + 4 * (static_cast<int64_t>(l) + 1);
    const int64_t c = static_cast<int64_t>(l) - static_cast<int64_t>(k) - 2;

    int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(d)));
    while (root * root > d) --root;
    while ((root + 1) * (root + 1) <= d) ++root;

    int64_t t = (root + c) / 2;
    if ((root + c) > 0 && (root + c) % 2 != 0) ++t;  // integer ceiling
    while (2 * t - c < 0 || (2 * t - c) * (2 * t - c) < d) ++t;

    const int64_t low = l + 1 > k ? static_cast<int64_t>(l + 1 - k) : 0;
    if (t < low) t = low;
    if (t > static_cast<int64_t>(l)) t = static_cast<int64_t>(l);
    return static_cast<uint32_t>(t);
}

// Closed-form maximizing shape, valid from n = 8 on: k = floor((n+2)/2),
// l = ceil((n-2)/2), m from optimal_m.  Smaller n have irregular optima;
// use worst_case there.
inline OptimalTriple optimal_partition(uint32_t n) {
    if (n < 8) throw std::domain_error("closed form holds for n >= 8; use worst_case below that");
    const uint32_t k = (n + 2) / 2;
    const uint32_t l = n - k;
    const uint32_t m = optimal_m(k, l);
    return {k, l, m, transform_size(k, l, m)};
}

// Worst-case one-way blowup of an n-state sweeping automaton with no
// permutation structure: max over k of k^(n-k+1), plus one.
inline BigNat sweeping_bound(uint32_t n) {
    if (n < 1) throw std::domain_error("sweeping_bound requires n >= 1");
    BigNat best = 0;
    for (uint32_t k = 1; k <= n; ++k) {
        BigNat v = boost::multiprecision::pow(BigNat(k), n - k + 1);
        if (v > best) best = v;
    }
    return best + 1;
}

// Worst-case one-way blowup of an unrestricted n-state two-way automaton:
// n (n^n - (n-1)^n) + 1.
inline BigNat kapoutsis_bound(uint32_t n) {
    if (n < 1) throw std::domain_error("kapoutsis_bound requires n >= 1");
    return BigNat(n) * (boost::multiprecision::pow(BigNat(n), n) -
                        boost::multiprecision::pow(BigNat(n) - 1, n)) + 1;
}

struct BoundsRow {
    uint32_t n = 0;
    BigNat permutation_sweeping;  // worst_case(n).value
    BigNat sweeping;              // sweeping_bound(n)
    BigNat two_way;               // kapoutsis_bound(n)
};

inline std::vector<BoundsRow> bounds_table(uint32_t max_n) {
    if (max_n < 1) throw std::domain_error("bounds_table requires max_n >= 1");
    std::vector<BoundsRow> rows;
    rows.reserve(max_n);
    for (uint32_t n = 1; n <= max_n; ++n)
        rows.push_back({n, worst_case(n).value, sweeping_bound(n), kapoutsis_bound(n)});
    return rows;
}

// How far the exponent of the worst case falls short of n/2, rescaled:
// rho(n) = (n/2 - log F / log n) * (log n) / n for F = worst_case(n).value.
// As n grows this approaches (1 + ln 2) / 2 ≈ 0.84657.
inline Real exponent_estimate(uint32_t n) {
    if (n < 8) throw std::domain_error("exponent_estimate requires n >= 8");
    const Real log_f = boost::multiprecision::log(static_cast<Real>(worst_case(n).value));
    const Real log_n = boost::multiprecision::log(static_cast<Real>(n));
    return (Real(n) / 2 - log_f / log_n) * log_n / Real(n);
}

} // namespace sweepfa
