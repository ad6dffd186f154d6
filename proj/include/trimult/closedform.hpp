#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "trimult/bigfloat.hpp"
#include "trimult/recurrence.hpp"

namespace trimult {

/// Constant particular solution of the lag-r recurrence for this kind:
/// -1/2 for the index sequences, -(T_kappa - gamma)/(4 kappa (kappa+2)) for
/// T_t and k times that for T_xi.
BigRat particular_constant(const MultiplierParams& p, SequenceKind kind);

/// Substitutes the constant for all three terms of its recurrence and checks
/// the identity as exact rationals.
bool particular_identity_holds(const MultiplierParams& p, SequenceKind kind);

/// One residue class of a rank-r sequence: x_{q r + s} = a * u^q + conj(a * u^q)
/// + particular, with u the norm-1 unit (theta for index sequences, theta^2
/// for value sequences). The conjugate coefficient is implied, which is what
/// keeps every evaluated term rational.
struct ResidueForm {
    SequenceKind kind;
    int residue = 0;   // s in [0, r)
    QuadElem a;        // coefficient on u^q
    QuadElem unit;     // u
    BigRat particular;
};

/// Solve the 2x2 anchor system per residue class (anchors x_s and x_{s+r})
/// over Q(sqrt(D)). Throws std::domain_error if the unit is degenerate,
/// which a valid non-square multiplier never produces.
std::vector<ResidueForm> build_residue_forms(const MultiplierParams& p, SequenceKind kind);

/// Exact term in O(log n) quadratic multiplications. Throws std::logic_error
/// if the result fails to come out a rational integer (a construction bug,
/// impossible on validated parameters).
BigInt eval_at(const std::vector<ResidueForm>& forms, std::uint64_t n);

/// The closed-form constants of the t-sequence for ranks 1..4, evaluated
/// numerically at the requested precision, together with the r-th roots
/// alpha = theta^(1/r) and beta = conj(theta)^(1/r) (positive real roots,
/// alpha * beta = 1).
struct TrigFormConstants {
    int rank = 0;
    BigFloat alpha, beta;
    std::vector<std::pair<std::string, BigFloat>> constants;
};

/// Throws std::domain_error for ranks outside 1..4 (the generic residue
/// engine still covers those).
TrigFormConstants trig_form_constants(const MultiplierParams& p,
                               mpfr_prec_t precision = BigFloat::kDefaultPrecision);

/// Full homogeneous-plus-particular expression for t_n, trigonometric factors
/// and all. Rounding this must land on the exact engine's integers.
BigFloat reconstruct_via_trig(const TrigFormConstants& c, std::uint64_t n);

/// Nearest integer if within 2^-guard_bits of one, else nothing: loud
/// precision-exhaustion detection for the numeric layer.
std::optional<BigInt> round_with_guard(const BigFloat& v, long guard_bits = 32);

struct RootCheckReport {
    int root_count = 0;        // 2r
    BigFloat max_residual;     // max |z^{2r} - 2(kappa+1) z^r + 1| over roots
    BigFloat product_error;    // |prod(roots) - 1|
};

/// Numerically confirm that alpha, beta spread over the r-th roots of unity
/// satisfy the characteristic equation x^{2r} - 2(kappa+1) x^r + 1 = 0.
RootCheckReport char_poly_root_check(const MultiplierParams& p,
                                     mpfr_prec_t precision = BigFloat::kDefaultPrecision);

nlohmann::json residue_forms_to_json(const std::vector<ResidueForm>& forms);
std::vector<ResidueForm> residue_forms_from_json(const nlohmann::json& j);

}  // namespace trimult
