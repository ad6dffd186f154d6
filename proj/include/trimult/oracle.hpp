#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "trimult/integer.hpp"

namespace trimult {

/// Triangular number t(t+1)/2. The formula itself honors the negative-index
/// convention T_{-t} = T_{t-1}, so any integer argument is fine.
inline BigInt triangular(const BigInt& t) {
    BigInt prod = t * (t + 1);
    return prod / 2;
}

/// The xi with T_xi = k * T_t, if it exists: xi = (isqrt(1 + 4k t(t+1)) - 1)/2
/// when the discriminant is a perfect square. Absence is a value, not an error.
std::optional<BigInt> xi_for_t(const BigInt& k, const BigInt& t);

struct SolutionPair {
    BigInt t;
    BigInt xi;
    BigInt t_value;   // T_t
    BigInt xi_value;  // T_xi

    friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

inline BigInt default_t_cap() { return BigInt(10000000); }

struct EnumerationResult {
    std::vector<SolutionPair> solutions;  // ordered by t, starting at t = 0
    bool complete;                        // false: cap hit before `count` found
    BigInt scanned_to;                    // last t examined
};

/// Brute force: scan t = 0,1,2,... and keep the solutions of T_xi = k * T_t.
/// k must be a non-square > 1. Stops after `count` solutions or at t_cap,
/// whichever comes first; a short result is flagged, never silent.
EnumerationResult enumerate_solutions(const BigInt& k, std::size_t count,
                                      const BigInt& t_cap = default_t_cap());

struct SquareSearchResult {
    std::vector<SolutionPair> solutions;  // nontrivial only (t >= 1)
    bool at_most_one;                     // the expected count pattern held in-bound
    BigInt t_cap;
};

/// Exhaustive search for nontrivial solutions when k is a perfect square > 1.
SquareSearchResult square_k_search(const BigInt& k, const BigInt& t_cap);

namespace detail {

/// Scan t in [t_from, t_to] and call sink(t) for every solution; returns false
/// if the sink asked to stop early. Generic exact path on big integers.
bool scan_range_mpz(const BigInt& k, const BigInt& t_from, const BigInt& t_to,
                    const std::function<bool(const BigInt&)>& sink);

/// Same contract, restricted to ranges where 1 + 4k t(t+1) fits unsigned
/// __int128 comfortably; exact integer arithmetic throughout.
bool scan_range_fast(std::uint64_t k, std::uint64_t t_from, std::uint64_t t_to,
                     const std::function<bool(std::uint64_t)>& sink);

/// Dispatches to the fast scanner when the bounds allow, else the mpz one.
bool scan_range(const BigInt& k, const BigInt& t_from, const BigInt& t_to,
                const std::function<bool(const BigInt&)>& sink);

}  // namespace detail

}  // namespace trimult
