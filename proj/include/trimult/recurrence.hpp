#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trimult/params.hpp"

namespace trimult {

/// The four sequences tied to one multiplier: solution indices t and xi, and
/// the triangular values T_t and T_xi.
enum class SequenceKind { TIndex, XiIndex, TValue, XiValue };

inline constexpr std::array<SequenceKind, 4> kAllSequenceKinds = {
    SequenceKind::TIndex, SequenceKind::XiIndex, SequenceKind::TValue, SequenceKind::XiValue};

constexpr std::string_view kind_name(SequenceKind k) {
    switch (k) {
        case SequenceKind::TIndex: return "t";
        case SequenceKind::XiIndex: return "xi";
        case SequenceKind::TValue: return "Tt";
        case SequenceKind::XiValue: return "Txi";
    }
    return "?";
}

std::optional<SequenceKind> parse_kind(std::string_view name);

constexpr bool is_value_kind(SequenceKind k) {
    return k == SequenceKind::TValue || k == SequenceKind::XiValue;
}

/// x_n = multiplier * x_{n-lag} - x_{n-2*lag} + constant, primed with the
/// first 2*lag terms. Index sequences use multiplier 2(kappa+1) and constant
/// kappa; value sequences use 4(kappa+1)^2 - 2 and (T_kappa - gamma) scaled
/// by k for T_xi.
struct RecurrenceSpec {
    SequenceKind kind;
    BigInt multiplier;
    BigInt constant;
    int lag = 0;
    std::vector<BigInt> window;  // terms n = 0 .. 2*lag-1
};

RecurrenceSpec build_spec(const MultiplierParams& p, SequenceKind kind);

/// First `count` terms. Each new term costs one big multiplication, one
/// subtraction and one addition; only the trailing 2r terms are retained
/// while streaming.
std::vector<BigInt> generate(const RecurrenceSpec& spec, std::size_t count);

/// n-th term by plain iteration: the O(n) baseline the closed form beats.
BigInt term_at(const RecurrenceSpec& spec, std::uint64_t n);

}  // namespace trimult
