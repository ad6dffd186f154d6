#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trimult/oracle.hpp"
#include "trimult/quad.hpp"

namespace trimult {

/// Everything the recurrence and closed-form engines need for one multiplier:
/// rank r, the seed-pair sum kappa and product gamma, the field discriminant
/// D, the norm-1 unit theta = (kappa+1) + sqrt(kappa(kappa+2)) over sqrt(D),
/// and the first 2r solutions t_0..t_{2r-1}.
struct MultiplierParams {
    BigInt k;
    int rank = 0;
    BigInt kappa;
    BigInt gamma;
    BigInt d;        // squarefree core of kappa*(kappa+2)
    QuadElem theta;  // (kappa+1) + f*sqrt(d) with kappa*(kappa+2) == d*f^2
    std::vector<BigInt> seeds;

    friend bool operator==(const MultiplierParams&, const MultiplierParams&) = default;
};

/// Scan budget ran out before the rank decision had enough solutions.
struct CapExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No lag up to r_max makes the recurrence consistent with the solution list.
struct DetectionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DetectOptions {
    BigInt t_cap = default_t_cap();
    int r_max = 16;
};

/// Find the smallest rank whose recurrence reproduces the brute-forced
/// solution list (seeds reflected per t_j = t_{-(j+1)}), then verified through
/// index 3r, and assemble the parameter bundle. Throws std::domain_error for
/// square or k <= 1, CapExhausted / DetectionFailure as named.
MultiplierParams detect_params(const BigInt& k, const DetectOptions& opts = {});

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Re-derive kappa/gamma from the seeds, confirm norm(theta) == 1 and the
/// field data, regenerate the seeds through the reflected recurrence, and
/// check the recurrence against fresh oracle solutions beyond the seeds
/// (up to `depth` of them, bounded by the scan cap). Failures are reported,
/// not thrown.
ValidationReport validate_params(const MultiplierParams& p, int depth,
                                 const BigInt& t_cap = default_t_cap());

/// Fixture bundles for the six worked multipliers (k = 2, 3, 5, 8, 10, 13).
/// Each entry equals detect_params(k).
std::vector<MultiplierParams> known_params_table();

nlohmann::json params_to_json(const MultiplierParams& p);
MultiplierParams params_from_json(const nlohmann::json& j);

}  // namespace trimult
