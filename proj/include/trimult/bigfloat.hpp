#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "trimult/integer.hpp"

namespace trimult {

/// Arbitrary-precision binary float over MPFR, round-to-nearest everywhere.
/// The precision is fixed per value at construction; binary operations carry
/// the larger precision of their operands so results never silently drop
/// below what the caller configured.
class BigFloat {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;

    BigFloat() {
        mpfr_init2(v_, kDefaultPrecision);
        mpfr_set_ui(v_, 0, MPFR_RNDN);
    }
    static BigFloat zero(mpfr_prec_t prec) {
        BigFloat r;
        mpfr_set_prec(r.v_, prec);
        mpfr_set_ui(r.v_, 0, MPFR_RNDN);
        return r;
    }
    BigFloat(long x, mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(const BigInt& x, mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const BigRat& x, mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, o.precision());
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

    static BigFloat pi(mpfr_prec_t prec = kDefaultPrecision) {
        BigFloat r = zero(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    /// 2^e, exact.
    static BigFloat pow2(long e, mpfr_prec_t prec = kDefaultPrecision) {
        BigFloat r(1L, prec);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r = zero(joint(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r = zero(joint(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r = zero(joint(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r = zero(joint(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r = zero(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r = zero(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r = zero(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    /// Positive real k-th root.
    BigFloat root(unsigned long k) const {
        BigFloat r = zero(precision());
        mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
        return r;
    }
    BigFloat pow(long e) const {
        BigFloat r = zero(precision());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    BigFloat cos() const {
        BigFloat r = zero(precision());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sin() const {
        BigFloat r = zero(precision());
        mpfr_sin(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat ldexp(long e) const {
        BigFloat r = zero(precision());
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    int sign() const { return mpfr_sgn(v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    /// Nearest integer (ties away handled by MPFR's rint-to-nearest-even;
    /// all uses sit far from ties by construction).
    BigInt round_nearest() const {
        BigFloat t = zero(precision());
        mpfr_rint(t.v_, v_, MPFR_RNDN);
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    /// |x - round(x)|
    BigFloat distance_to_nearest_int() const {
        BigFloat nearest(BigInt(round_nearest()), precision());
        return (*this - nearest).abs();
    }

    std::string to_string(int digits = 40) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    static mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) {
        return std::max(a.precision(), b.precision());
    }
    mpfr_t v_;
};

}  // namespace trimult
