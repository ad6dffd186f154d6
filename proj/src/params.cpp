#include "trimult/params.hpp"

#include <algorithm>

namespace trimult {

namespace {

// Value at index m of the t-sequence extended by reflection t_{-(j+1)} = t_j.
const BigInt& reflected(const std::vector<BigInt>& t, long m) {
    return m >= 0 ? t[static_cast<std::size_t>(m)]
                  : t[static_cast<std::size_t>(-m - 1)];
}

// Does the lag-r recurrence with this kappa reproduce the whole prefix
// (reflection supplying negative lookbacks), and do its extension terms
// through index >= 3r stay genuine, strictly increasing solutions?
bool rank_consistent(const BigInt& k, const std::vector<BigInt>& prefix, int r,
                     const BigInt& kappa) {
    const BigInt coeff = 2 * (kappa + 1);
    for (std::size_t n = 0; n < prefix.size(); ++n) {
        const BigInt expect = coeff * reflected(prefix, static_cast<long>(n) - r) -
                              reflected(prefix, static_cast<long>(n) - 2 * r) + kappa;
        if (prefix[n] != expect) return false;
    }
    // extension: O(1) solution test per term, no further scanning
    std::vector<BigInt> window(prefix.end() - 2 * r, prefix.end());
    BigInt prev = prefix.back();
    for (std::size_t n = prefix.size(); n <= static_cast<std::size_t>(3 * r); ++n) {
        BigInt next = coeff * window[window.size() - r] - window[window.size() - 2 * r] + kappa;
        if (next <= prev || !xi_for_t(k, next)) return false;
        window.erase(window.begin());
        window.push_back(next);
        prev = window.back();
    }
    return true;
}

MultiplierParams assemble(const BigInt& k, int r, const std::vector<BigInt>& prefix) {
    MultiplierParams p;
    p.k = k;
    p.rank = r;
    p.kappa = prefix[r - 1] + prefix[r];
    p.gamma = prefix[r - 1] * prefix[r];
    SquarefreeDecomposition sq = squarefree_core(p.kappa * (p.kappa + 2));
    p.d = sq.core;
    p.theta = QuadElem(BigRat(p.kappa + 1), BigRat(sq.factor), p.d);
    p.seeds.assign(prefix.begin(), prefix.begin() + 2 * r);
    return p;
}

}  // namespace

MultiplierParams detect_params(const BigInt& k, const DetectOptions& opts) {
    if (k <= 1) throw std::domain_error("detect_params: k must be > 1");
    if (is_perfect_square(k))
        throw std::domain_error("detect_params: k is a perfect square; use square_k_search");

    std::vector<BigInt> prefix;  // t-values of solutions, in order
    BigInt next_scan = 0;        // first t not yet examined

    auto extend_to = [&](std::size_t want) {
        while (prefix.size() < want && next_scan <= opts.t_cap) {
            detail::scan_range(k, next_scan, opts.t_cap, [&](const BigInt& t) {
                prefix.push_back(t);
                return prefix.size() < want;
            });
            next_scan =
                prefix.size() >= want ? BigInt(prefix.back() + 1) : BigInt(opts.t_cap + 1);
        }
        return prefix.size() >= want;
    };

    for (int r = 1; r <= opts.r_max; ++r) {
        const std::size_t need = static_cast<std::size_t>(2 * r + 1);
        if (!extend_to(need))
            throw CapExhausted("detect_params: scan cap " + to_decimal(opts.t_cap) +
                               " exhausted with " + std::to_string(prefix.size()) +
                               " solutions; rank " + std::to_string(r) + " needs " +
                               std::to_string(need) + " (raise the cap)");
        const BigInt kappa = prefix[r - 1] + prefix[r];
        if (kappa == 0) continue;
        if (rank_consistent(k, prefix, r, kappa)) return assemble(k, r, prefix);
    }
    throw DetectionFailure("detect_params: no consistent rank <= " +
                           std::to_string(opts.r_max) + " for k = " + to_decimal(k));
}

ValidationReport validate_params(const MultiplierParams& p, int depth, const BigInt& t_cap) {
    ValidationReport rep;
    auto add = [&](std::string name, bool ok, std::string detail = "") {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const int r = p.rank;
    bool shape_ok = r >= 1 && p.seeds.size() == static_cast<std::size_t>(2 * r);
    add("seed_window_shape", shape_ok,
        "expect 2r = " + std::to_string(2 * r) + " seeds, have " +
            std::to_string(p.seeds.size()));
    if (!shape_ok) return rep;

    add("kappa_is_seed_sum", p.kappa == p.seeds[r - 1] + p.seeds[r],
        "kappa = " + to_decimal(p.kappa));
    add("gamma_is_seed_product", p.gamma == p.seeds[r - 1] * p.seeds[r],
        "gamma = " + to_decimal(p.gamma));

    add("theta_norm_is_one", p.theta.norm() == BigRat(1),
        "norm(theta) = " + to_fraction_string(p.theta.norm()));
    bool field_ok = p.theta.p == BigRat(p.kappa + 1) && p.theta.d == p.d &&
                    BigRat(p.d) * p.theta.q * p.theta.q == BigRat(p.kappa * (p.kappa + 2)) &&
                    squarefree_core(p.d).factor == 1;
    add("theta_matches_kappa_field", field_ok, "theta = " + p.theta.to_string());

    bool seeds_solve = true;
    for (const BigInt& s : p.seeds)
        if (!xi_for_t(p.k, s)) seeds_solve = false;
    add("seeds_are_solutions", seeds_solve);

    // reflected recurrence regenerates the seed window itself
    const BigInt coeff = 2 * (p.kappa + 1);
    bool reflect_ok = true;
    for (std::size_t n = 0; n < p.seeds.size(); ++n) {
        BigInt expect = coeff * reflected(p.seeds, static_cast<long>(n) - r) -
                        reflected(p.seeds, static_cast<long>(n) - 2 * r) + p.kappa;
        if (p.seeds[n] != expect) reflect_ok = false;
    }
    add("reflection_consistency", reflect_ok);

    // fresh oracle terms beyond the seeds, as many as the cap yields
    std::vector<BigInt> fresh;
    BigInt from = p.seeds.back() + 1;
    detail::scan_range(p.k, from, t_cap, [&](const BigInt& t) {
        fresh.push_back(t);
        return fresh.size() < static_cast<std::size_t>(depth);
    });
    std::vector<BigInt> window = p.seeds;
    bool rec_ok = true;
    for (const BigInt& t : fresh) {
        BigInt next = coeff * window[window.size() - r] - window[window.size() - 2 * r] + p.kappa;
        if (next != t) rec_ok = false;
        window.erase(window.begin());
        window.push_back(next);
    }
    add("recurrence_matches_oracle", rec_ok,
        std::to_string(fresh.size()) + " fresh oracle terms checked (depth " +
            std::to_string(depth) + ", cap " + to_decimal(t_cap) + ")");
    return rep;
}

std::vector<MultiplierParams> known_params_table() {
    // Worked multipliers; every entry is reproduced by detect_params.
    struct Row {
        long k;
        int r;
        long kappa;
        std::vector<long> seeds;
    };
    static const std::vector<Row> rows = {
        {2, 1, 2, {0, 2}},
        {3, 1, 1, {0, 1}},
        {5, 2, 8, {0, 2, 6, 44}},
        {8, 2, 16, {0, 5, 11, 186}},
        {10, 3, 18, {0, 1, 6, 12, 55, 246}},
        {13, 4, 648, {0, 3, 21, 234, 414, 4521, 27903, 304380}},
    };
    std::vector<MultiplierParams> out;
    for (const Row& row : rows) {
        MultiplierParams p;
        p.k = row.k;
        p.rank = row.r;
        p.kappa = row.kappa;
        p.gamma = BigInt(row.seeds[row.r - 1]) * BigInt(row.seeds[row.r]);
        SquarefreeDecomposition sq = squarefree_core(p.kappa * (p.kappa + 2));
        p.d = sq.core;
        p.theta = QuadElem(BigRat(p.kappa + 1), BigRat(sq.factor), p.d);
        for (long s : row.seeds) p.seeds.emplace_back(s);
        out.push_back(std::move(p));
    }
    return out;
}

nlohmann::json params_to_json(const MultiplierParams& p) {
    nlohmann::json j;
    j["k"] = p.k.get_si();
    j["r"] = p.rank;
    j["kappa"] = to_decimal(p.kappa);
    j["gamma"] = to_decimal(p.gamma);
    j["D"] = to_decimal(p.d);
    j["theta_p"] = to_fraction_string(p.theta.p);
    j["theta_q"] = to_fraction_string(p.theta.q);
    j["seeds"] = nlohmann::json::array();
    for (const BigInt& s : p.seeds) j["seeds"].push_back(to_decimal(s));
    return j;
}

MultiplierParams params_from_json(const nlohmann::json& j) {
    MultiplierParams p;
    p.k = BigInt(j.at("k").get<long>());
    p.rank = j.at("r").get<int>();
    p.kappa = parse_decimal(j.at("kappa").get<std::string>());
    p.gamma = parse_decimal(j.at("gamma").get<std::string>());
    p.d = parse_decimal(j.at("D").get<std::string>());
    p.theta = QuadElem(parse_fraction(j.at("theta_p").get<std::string>()),
                       parse_fraction(j.at("theta_q").get<std::string>()), p.d);
    for (const auto& s : j.at("seeds")) p.seeds.push_back(parse_decimal(s.get<std::string>()));
    return p;
}

}  // namespace trimult
