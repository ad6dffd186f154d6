#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "trimult/bigfloat.hpp"
#include "trimult/integer.hpp"

namespace trimult {

namespace detail {
inline thread_local std::uint64_t quad_mul_ops = 0;
}

/// Running count of quadratic-element multiplications on this thread.
/// Instrumentation for the O(log n) evaluation guarantee.
inline std::uint64_t quad_mul_count() { return detail::quad_mul_ops; }
inline void reset_quad_mul_count() { detail::quad_mul_ops = 0; }

/// Element p + q*sqrt(d) of Q(sqrt(d)), d squarefree and not a square.
/// Elements over different d never mix; attempting to combine them throws.
struct QuadElem {
    BigRat p;
    BigRat q;
    BigInt d;

    QuadElem() : p(0), q(0), d(2) {}
    QuadElem(BigRat p_, BigRat q_, BigInt d_)
        : p(std::move(p_)), q(std::move(q_)), d(std::move(d_)) {
        if (d < 2) throw std::domain_error("QuadElem: d must be >= 2");
    }

    static QuadElem one(const BigInt& d) { return QuadElem(BigRat(1), BigRat(0), d); }

    QuadElem conj() const { return QuadElem(p, -q, d); }

    /// Field norm p^2 - q^2 d, multiplicative.
    BigRat norm() const { return BigRat(p * p - q * q * BigRat(d)); }

    QuadElem pow(std::uint64_t e) const;

    BigFloat to_bigfloat(mpfr_prec_t prec = BigFloat::kDefaultPrecision) const {
        return BigFloat(p, prec) + BigFloat(q, prec) * BigFloat(d, prec).sqrt();
    }

    std::string to_string() const {
        return to_fraction_string(p) + " + " + to_fraction_string(q) + "*sqrt(" +
               to_decimal(d) + ")";
    }

    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.d == b.d && a.p == b.p && a.q == b.q;
    }

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
        require_same_field(a, b);
        return QuadElem(a.p + b.p, a.q + b.q, a.d);
    }
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
        require_same_field(a, b);
        return QuadElem(a.p - b.p, a.q - b.q, a.d);
    }
    friend QuadElem operator-(const QuadElem& a) { return QuadElem(-a.p, -a.q, a.d); }
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
        require_same_field(a, b);
        ++detail::quad_mul_ops;
        BigRat p = a.p * b.p + a.q * b.q * BigRat(a.d);
        BigRat q = a.p * b.q + a.q * b.p;
        return QuadElem(std::move(p), std::move(q), a.d);
    }
    friend QuadElem operator*(const BigRat& c, const QuadElem& a) {
        return QuadElem(c * a.p, c * a.q, a.d);
    }

private:
    static void require_same_field(const QuadElem& a, const QuadElem& b) {
        if (a.d != b.d)
            throw std::domain_error("QuadElem: mixing elements of Q(sqrt(" + to_decimal(a.d) +
                                    ")) and Q(sqrt(" + to_decimal(b.d) + "))");
    }
};

inline QuadElem QuadElem::pow(std::uint64_t e) const {
    QuadElem result = one(d);
    QuadElem base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

}  // namespace trimult
