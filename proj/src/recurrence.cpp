#include "trimult/recurrence.hpp"

namespace trimult {

std::optional<SequenceKind> parse_kind(std::string_view name) {
    for (SequenceKind k : kAllSequenceKinds)
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

RecurrenceSpec build_spec(const MultiplierParams& p, SequenceKind kind) {
    RecurrenceSpec spec;
    spec.kind = kind;
    spec.lag = p.rank;
    if (is_value_kind(kind)) {
        spec.multiplier = 4 * (p.kappa + 1) * (p.kappa + 1) - 2;
        spec.constant = triangular(p.kappa) - p.gamma;
        if (kind == SequenceKind::XiValue) spec.constant *= p.k;
    } else {
        spec.multiplier = 2 * (p.kappa + 1);
        spec.constant = p.kappa;
    }
    spec.window.reserve(p.seeds.size());
    for (const BigInt& t : p.seeds) {
        switch (kind) {
            case SequenceKind::TIndex: spec.window.push_back(t); break;
            case SequenceKind::TValue: spec.window.push_back(triangular(t)); break;
            case SequenceKind::XiIndex:
            case SequenceKind::XiValue: {
                auto xi = xi_for_t(p.k, t);
                if (!xi)
                    throw std::invalid_argument("build_spec: seed " + to_decimal(t) +
                                                " is not a solution for k = " + to_decimal(p.k));
                spec.window.push_back(kind == SequenceKind::XiIndex ? *xi : triangular(*xi));
                break;
            }
        }
    }
    return spec;
}

std::vector<BigInt> generate(const RecurrenceSpec& spec, std::size_t count) {
    if (count == 0) throw std::domain_error("generate: count must be positive");
    const std::size_t w = spec.window.size();
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count && n < w; ++n) out.push_back(spec.window[n]);
    if (count <= w) return out;

    std::vector<BigInt> ring = spec.window;  // last 2r terms, ring[head] oldest
    std::size_t head = 0;
    const std::size_t r = static_cast<std::size_t>(spec.lag);
    for (std::size_t n = w; n < count; ++n) {
        // ring[head] is x_{n-2r}; x_{n-r} sits r slots later
        BigInt next = spec.multiplier * ring[(head + r) % w] - ring[head] + spec.constant;
        out.push_back(next);
        ring[head] = std::move(next);
        head = (head + 1) % w;
    }
    return out;
}

BigInt term_at(const RecurrenceSpec& spec, std::uint64_t n) {
    const std::size_t w = spec.window.size();
    if (n < w) return spec.window[static_cast<std::size_t>(n)];
    std::vector<BigInt> ring = spec.window;
    std::size_t head = 0;
    const std::size_t r = static_cast<std::size_t>(spec.lag);
    BigInt next;
    for (std::uint64_t i = w; i <= n; ++i) {
        next = spec.multiplier * ring[(head + r) % w] - ring[head] + spec.constant;
        ring[head] = next;
        head = (head + 1) % w;
    }
    return next;
}

}  // namespace trimult
