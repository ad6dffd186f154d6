#include "trimult/oracle.hpp"

#include <array>
#include <cmath>

namespace trimult {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    // long double seed (64-bit mantissa), then exact fixup
    u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Quadratic-residue tables for quick square rejection. The discriminant is
// always 1 mod 8, so power-of-two moduli reject nothing useful; odd moduli do.
template <unsigned M>
constexpr std::array<bool, M> residue_table() {
    std::array<bool, M> t{};
    for (unsigned i = 0; i < M; ++i) t[(i * i) % M] = true;
    return t;
}
constexpr auto kRes63 = residue_table<63>();
constexpr auto kRes65 = residue_table<65>();
constexpr auto kRes11 = residue_table<11>();

}  // namespace

std::optional<BigInt> xi_for_t(const BigInt& k, const BigInt& t) {
    if (k < 1) throw std::domain_error("xi_for_t: k must be >= 1");
    BigInt disc = 1 + 4 * k * t * (t + 1);
    IsqrtResult s = isqrt(disc);
    if (!s.exact) return std::nullopt;
    // disc is odd, so the exact root is odd and (root-1)/2 is integral
    return BigInt((s.root - 1) / 2);
}

namespace detail {

bool scan_range_mpz(const BigInt& k, const BigInt& t_from, const BigInt& t_to,
                    const std::function<bool(const BigInt&)>& sink) {
    BigInt disc;
    for (BigInt t = t_from; t <= t_to; ++t) {
        disc = 1 + 4 * k * t * (t + 1);
        if (mpz_perfect_square_p(disc.get_mpz_t())) {
            if (!sink(t)) return false;
        }
    }
    return true;
}

bool scan_range_fast(u64 k, u64 t_from, u64 t_to,
                     const std::function<bool(u64)>& sink) {
    if (t_from > t_to) return true;
    // disc(t) = 1 + 4k t(t+1); successive differences are 8k(t+1), so the
    // residue mod 63*65*11 can be carried along with plain adds. Only the
    // few t that survive the residue filter pay for a 128-bit isqrt.
    constexpr u64 M = 63ull * 65 * 11;  // 45045
    const u128 k4 = static_cast<u128>(4) * k;
    const u64 k8m = (8 * (k % M)) % M;
    u64 dm = static_cast<u64>((1 + k4 * (static_cast<u128>(t_from) * (t_from + 1))) % M);
    u64 sm = static_cast<u64>((static_cast<u128>(8) * k * (t_from + 1)) % M);
    for (u64 t = t_from;;) {
        if (kRes63[dm % 63] && kRes65[dm % 65] && kRes11[dm % 11]) {
            u128 disc = 1 + k4 * (static_cast<u128>(t) * (t + 1));
            u128 r = isqrt_u128(disc);
            if (r * r == disc) {
                if (!sink(t)) return false;
            }
        }
        if (t == t_to) break;
        ++t;
        dm += sm;
        if (dm >= M) dm -= M;
        sm += k8m;
        if (sm >= M) sm -= M;
    }
    return true;
}

bool scan_range(const BigInt& k, const BigInt& t_from, const BigInt& t_to,
                const std::function<bool(const BigInt&)>& sink) {
    // Fast path only when the largest discriminant fits unsigned __int128
    // with room for the isqrt fixup.
    static const BigInt kDiscBound = BigInt(1) << 126;
    if (t_from >= 0 && mpz_fits_ulong_p(k.get_mpz_t()) && mpz_fits_ulong_p(t_to.get_mpz_t()) &&
        1 + 4 * k * t_to * (t_to + 1) < kDiscBound) {
        return scan_range_fast(mpz_get_ui(k.get_mpz_t()), mpz_get_ui(t_from.get_mpz_t()),
                               mpz_get_ui(t_to.get_mpz_t()),
                               [&](u64 t) { return sink(BigInt(static_cast<unsigned long>(t))); });
    }
    return scan_range_mpz(k, t_from, t_to, sink);
}

}  // namespace detail

namespace {

SolutionPair make_pair_for(const BigInt& k, const BigInt& t) {
    SolutionPair p;
    p.t = t;
    auto xi = xi_for_t(k, t);
    if (!xi) throw std::logic_error("internal: scanner reported a non-solution");
    p.xi = *xi;
    p.t_value = triangular(p.t);
    p.xi_value = triangular(p.xi);
    return p;
}

}  // namespace

EnumerationResult enumerate_solutions(const BigInt& k, std::size_t count, const BigInt& t_cap) {
    if (k <= 1) throw std::domain_error("enumerate_solutions: k must be > 1");
    if (is_perfect_square(k))
        throw std::domain_error("enumerate_solutions: k must be non-square (see square_k_search)");
    if (count == 0) throw std::domain_error("enumerate_solutions: count must be positive");

    EnumerationResult res;
    res.scanned_to = t_cap;
    detail::scan_range(k, BigInt(0), t_cap, [&](const BigInt& t) {
        res.solutions.push_back(make_pair_for(k, t));
        return res.solutions.size() < count;
    });
    res.complete = (res.solutions.size() >= count);
    if (res.complete) res.scanned_to = res.solutions.back().t;
    return res;
}

SquareSearchResult square_k_search(const BigInt& k, const BigInt& t_cap) {
    if (k <= 1 || !is_perfect_square(k))
        throw std::domain_error("square_k_search: k must be a perfect square > 1");

    SquareSearchResult res;
    res.t_cap = t_cap;
    detail::scan_range(k, BigInt(1), t_cap, [&](const BigInt& t) {
        res.solutions.push_back(make_pair_for(k, t));
        return true;
    });
    res.at_most_one = res.solutions.size() <= 1;
    return res;
}

}  // namespace trimult
