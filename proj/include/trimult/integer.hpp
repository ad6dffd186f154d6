#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace trimult {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Canonical rational: reduced to lowest terms with a positive denominator.
/// Every arithmetic result on BigRat stays canonical; this is the one entry
/// point where a raw numerator/denominator pair gets normalized.
inline BigRat make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

struct IsqrtResult {
    BigInt root;  // floor(sqrt(n))
    bool exact;   // root * root == n
};

/// Floor square root with an exactness flag. Throws std::domain_error for
/// negative input; exactness is reported, never signalled by exception.
inline IsqrtResult isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    IsqrtResult res;
    BigInt rem;
    mpz_sqrtrem(res.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    res.exact = (rem == 0);
    return res;
}

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

struct SquarefreeDecomposition {
    BigInt core;    // squarefree
    BigInt factor;  // m == core * factor^2
};

/// Split m >= 1 as d * f^2 with d squarefree, by trial division. Adequate for
/// the kappa*(kappa+2) sizes this library meets.
inline SquarefreeDecomposition squarefree_core(const BigInt& m) {
    if (m < 1) throw std::domain_error("squarefree_core: input must be positive");
    BigInt rest = m;
    SquarefreeDecomposition out{1, 1};
    auto strip = [&](const BigInt& p) {
        unsigned exp = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++exp;
        }
        if (exp & 1u) out.core *= p;
        for (unsigned i = 0; i < exp / 2; ++i) out.factor *= p;
    };
    strip(BigInt(2));
    for (BigInt p = 3; p * p <= rest; p += 2) strip(p);
    if (rest > 1) out.core *= rest;  // leftover prime
    return out;
}

inline std::string to_decimal(const BigInt& n) { return n.get_str(10); }

inline BigInt parse_decimal(const std::string& s) {
    BigInt n;
    if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_decimal: not a decimal integer: '" + s + "'");
    return n;
}

/// "num/den" in lowest terms, or plain "num" when the denominator is 1.
inline std::string to_fraction_string(const BigRat& r) { return r.get_str(10); }

inline BigRat parse_fraction(const std::string& s) {
    BigRat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("parse_fraction: not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace trimult
