#pragma once

#include <optional>
#include <string>

#include "padictk/util.hpp"

namespace padictk {

// Capped-precision element of Q_p.
//
// A nonzero value is stored as p^val * unit with unit invertible mod p and
// known mod p^N (N = relative precision); the absolute precision is val + N.
// The zero at precision A ("O(p^A)") carries only its absolute precision A.
// Arithmetic never gains precision: results carry the minimum precision
// justified by the operands, and additive cancellation shows up as an
// increased valuation with correspondingly fewer unit digits.
class PadicNumber {
public:
    PadicNumber() = default;  // placeholder zero; assign before use
    static PadicNumber zero(long p, long abs_prec);
    static PadicNumber from_integer(const Int& x, long p, long N);
    static PadicNumber from_rational(const Rat& x, long p, long N);
    // internal representation, unit must be prime to p
    static PadicNumber from_unit(Int unit, long val, long p, long N);
    static PadicNumber one(long p, long N) { return from_integer(1, p, N); }

    long p() const { return p_; }
    bool is_zero() const { return zero_; }
    // valuation of a nonzero element; the zero's valuation is the
    // distinguished value INFINITY, reported via is_zero()
    long val() const;
    long rel_prec() const;  // N, nonzero values only
    long abs_prec() const { return zero_ ? absprec_ : val_ + N_; }
    const Int& unit() const;

    bool is_unit() const { return !zero_ && val_ == 0; }
    // canonical integer lift p^val*unit of a p-integral value, in [0, p^abs)
    Int lift() const;

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const { return *this + (-o); }
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const { return *this * o.inverse(); }
    PadicNumber inverse() const;
    PadicNumber pow(long e) const;

    // multiply by an exact rational (infinite-precision scalar)
    PadicNumber scale(const Rat& c) const;

    // congruence at the shared absolute precision; reports that precision
    struct Cmp {
        bool equal;
        long prec;
    };
    Cmp compare(const PadicNumber& o) const;
    bool operator==(const PadicNumber& o) const { return compare(o).equal; }

    // truncate to absolute precision A (no-op if already coarser)
    PadicNumber truncated(long abs) const;

    std::string str() const;  // "p^v * u  (mod p^abs)" rendering

private:
    long p_ = 0;
    bool zero_ = true;
    long val_ = 0;      // nonzero only
    long N_ = 0;        // relative precision, nonzero only
    long absprec_ = 0;  // zero only
    Int unit_;
};

// Teichmuller lift: the unique (p-1)-st root of unity congruent to a mod p.
PadicNumber teichmuller(const Int& a, long p, long N);

// Iwasawa logarithm of a unit of Z_p: kills the Teichmuller part via
// u -> u^(p-1), applies the 1-unit log series and divides by p-1.
PadicNumber plog(const PadicNumber& u);

// exp of an element with valuation >= 1
PadicNumber padic_exp(const PadicNumber& x);

// u^s for a 1-unit u (u = 1 mod p) and s in Z_p: exp(s*plog(u))
PadicNumber unit_pow(const PadicNumber& u, const PadicNumber& s);

// square root of D (p odd, p coprime to D, D a QR mod p) with the branch
// fixed by seed: the returned root is congruent to seed mod p.  When no
// seed is supplied, the numerically least admissible residue in [1, p-1]
// is used; this choice is the embedding selecting one prime above p.
PadicNumber hensel_sqrt(const Int& D, long p, long N,
                        std::optional<long> seed = std::nullopt);

}  // namespace padictk
