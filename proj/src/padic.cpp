#include "padictk/padic.hpp"

#include <algorithm>
#include <sstream>

namespace padictk {

PadicNumber PadicNumber::zero(long p, long abs_prec) {
    PadicNumber z;
    z.p_ = p;
    z.zero_ = true;
    z.absprec_ = abs_prec;
    return z;
}

PadicNumber PadicNumber::from_unit(Int unit, long val, long p, long N) {
    if (N < 1) return zero(p, val + N);
    Int pn = pow_ui(p, (unsigned long)N);
    unit = mod(unit, pn);
    if (unit % p == 0) throw NotAUnit("from_unit: unit part divisible by p");
    PadicNumber x;
    x.p_ = p;
    x.zero_ = false;
    x.val_ = val;
    x.N_ = N;
    x.unit_ = unit;
    return x;
}

PadicNumber PadicNumber::from_integer(const Int& x, long p, long N) {
    if (x == 0) return zero(p, N);
    long v = valuation(x, p);
    Int u = x / pow_ui(p, (unsigned long)v);
    return from_unit(u, v, p, N);
}

PadicNumber PadicNumber::from_rational(const Rat& x, long p, long N) {
    if (x == 0) return zero(p, N);
    long vn = valuation(x.get_num(), Int(p));
    long vd = valuation(x.get_den(), Int(p));
    Int num = x.get_num() / pow_ui(p, (unsigned long)vn);
    Int den = x.get_den() / pow_ui(p, (unsigned long)vd);
    Int pn = pow_ui(p, (unsigned long)N);
    Int u = mod(num * invmod(den, pn), pn);
    return from_unit(u, vn - vd, p, N);
}

long PadicNumber::val() const {
    if (zero_) throw ZeroAtPrecision("valuation of the zero at precision");
    return val_;
}

long PadicNumber::rel_prec() const {
    if (zero_) throw ZeroAtPrecision("relative precision of zero");
    return N_;
}

const Int& PadicNumber::unit() const {
    if (zero_) throw ZeroAtPrecision("unit part of zero");
    return unit_;
}

Int PadicNumber::lift() const {
    if (zero_) return 0;
    if (val_ < 0) throw NotAUnit("lift of a value with negative valuation");
    return pow_ui(p_, (unsigned long)val_) * unit_;
}

PadicNumber PadicNumber::truncated(long abs) const {
    if (abs >= abs_prec()) return *this;
    if (zero_) return zero(p_, abs);
    long N = abs - val_;
    if (N < 1) return zero(p_, abs);
    return from_unit(unit_, val_, p_, N);
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    return from_unit(-unit_, val_, p_, N_);
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (p_ != o.p_) throw MathError("Internal", "mixed primes");
    long abs = std::min(abs_prec(), o.abs_prec());
    if (zero_ && o.zero_) return zero(p_, abs);
    if (zero_) return o.truncated(abs);
    if (o.zero_) return truncated(abs);
    long v = std::min(val_, o.val_);
    long digits = abs - v;
    if (digits < 1) return zero(p_, abs);
    Int pm = pow_ui(p_, (unsigned long)digits);
    Int s = mod(pow_ui(p_, (unsigned long)(val_ - v)) * unit_ +
                    pow_ui(p_, (unsigned long)(o.val_ - v)) * o.unit_,
                pm);
    if (s == 0) return zero(p_, abs);
    long dv = valuation(s, p_);
    if (v + dv >= abs) return zero(p_, abs);
    return from_unit(s / pow_ui(p_, (unsigned long)dv), v + dv, p_, abs - v - dv);
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (p_ != o.p_) throw MathError("Internal", "mixed primes");
    if (zero_ || o.zero_) {
        // O(p^A) * x = O(p^(A + v(x)))
        long a = zero_ ? absprec_ : val_;
        long b = o.zero_ ? o.absprec_ : o.val_;
        return zero(p_, a + b);
    }
    long N = std::min(N_, o.N_);
    Int pn = pow_ui(p_, (unsigned long)N);
    return from_unit(mod(unit_ * o.unit_, pn), val_ + o.val_, p_, N);
}

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw NotAUnit("inverse of zero at precision");
    Int pn = pow_ui(p_, (unsigned long)N_);
    return from_unit(invmod(unit_, pn), -val_, p_, N_);
}

PadicNumber PadicNumber::pow(long e) const {
    if (e == 0) {
        long N = zero_ ? absprec_ : N_;
        return one(p_, std::max(1L, N));
    }
    if (e < 0) return inverse().pow(-e);
    if (zero_) return zero(p_, absprec_ * e);
    Int pn = pow_ui(p_, (unsigned long)N_);
    return from_unit(powmod(unit_, Int(e), pn), val_ * e, p_, N_);
}

PadicNumber PadicNumber::scale(const Rat& c) const {
    if (c == 0) {
        long a = zero_ ? absprec_ : val_;
        // exact 0 * O(p^a)-value: exact zero; cap at a large-but-finite window
        return zero(p_, a + (zero_ ? 0 : N_));
    }
    long vc = valuation(c, Int(p_));
    if (zero_) return zero(p_, absprec_ + vc);
    Int pn = pow_ui(p_, (unsigned long)N_);
    Rat unit_part = c / rat_pow(Rat(p_), vc);
    Int u = mod(unit_ * mod(unit_part.get_num(), pn) *
                    invmod(mod(unit_part.get_den(), pn), pn),
                pn);
    return from_unit(u, val_ + vc, p_, N_);
}

PadicNumber::Cmp PadicNumber::compare(const PadicNumber& o) const {
    long abs = std::min(abs_prec(), o.abs_prec());
    PadicNumber d = (*this - o).truncated(abs);
    return {d.is_zero(), abs};
}

std::string PadicNumber::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^" << absprec_ << ")";
    } else {
        os << pow_ui(p_, (unsigned long)std::max(0L, val_)) * unit_;
        if (val_ < 0) os << "/" << pow_ui(p_, (unsigned long)(-val_));
        os << " + O(" << p_ << "^" << abs_prec() << ")";
    }
    return os.str();
}

PadicNumber teichmuller(const Int& a, long p, long N) {
    if (mod(a, p) == 0) throw NotAUnit("teichmuller of a non-unit");
    if (N < 1) N = 1;
    Int pn = pow_ui(p, (unsigned long)N);
    Int x = mod(a, pn);
    for (long i = 0; i <= N + 1; ++i) {
        Int y = powmod(x, Int(p), pn);
        if (y == x) break;
        x = y;
    }
    return PadicNumber::from_unit(x, 0, p, N);
}

// log(1+t) for an integer t with v(t) >= 1, exact mod p^W
static Int log_one_plus(const Int& t, long p, long W) {
    // term x^k/k has valuation >= k - floor(log_p k); work with guard digits
    long K = W;
    for (;;) {
        long lg = 0;
        for (long q = p; q <= K; q *= p) ++lg;
        if (K - lg >= W) break;
        ++K;
    }
    long guard = 1;
    for (long q = p; q <= K; q *= p) ++guard;
    long WW = W + guard;
    Int pWW = pow_ui(p, (unsigned long)WW);
    Int pW = pow_ui(p, (unsigned long)W);
    Int acc = 0, tk = 1;
    for (long k = 1; k <= K; ++k) {
        tk = mod(tk * t, pWW);
        long vk = 0;
        long kk = k;
        while (kk % p == 0) {
            kk /= p;
            ++vk;
        }
        // x^k is divisible by p^k >= p^vk, so the residue divides exactly
        Int term = tk / pow_ui(p, (unsigned long)vk);
        term = mod(term * invmod(Int(kk), pWW), pWW);
        if (k % 2 == 0) term = -term;
        acc = mod(acc + term, pWW);
    }
    return mod(acc, pW);
}

PadicNumber plog(const PadicNumber& u) {
    if (u.is_zero() || u.val() != 0) throw NotAUnit("plog of a non-unit");
    long p = u.p();
    long N = u.rel_prec();
    Int pN = pow_ui(p, (unsigned long)N);
    // reduce to the 1-unit u^(p-1); its log is (p-1)*log(u)
    Int t = mod(powmod(u.unit(), Int(p - 1), pN) - 1, pN);
    Int L;
    if (t == 0) {
        L = 0;
    } else {
        L = log_one_plus(t, p, N);
    }
    L = mod(L * invmod(Int(p - 1), pN), pN);
    if (L == 0) return PadicNumber::zero(p, N);
    long v = valuation(L, Int(p));
    if (v >= N) return PadicNumber::zero(p, N);
    return PadicNumber::from_unit(L / pow_ui(p, (unsigned long)v), v, p, N - v);
}

PadicNumber padic_exp(const PadicNumber& x) {
    long p = x.p();
    if (x.is_zero()) {
        long A = x.abs_prec();
        return PadicNumber::one(p, A);
    }
    if (x.val() < 1) throw PrecisionExhausted("exp requires valuation >= 1");
    long W = x.abs_prec();
    // v(x^k/k!) >= k - (k-1)/(p-1) and exp is accurate mod p^W
    long K = W;
    while (K - (K - 1) / (p - 1) < W + 1) ++K;
    long guard = 1;
    for (long q = p; q <= K; q *= p) guard += K / q;  // bound for v(k!)
    long WW = W + guard;
    Int pWW = pow_ui(p, (unsigned long)WW);
    Int X = mod(pow_ui(p, (unsigned long)x.val()) * x.unit(), pWW);
    Int acc = 1, xk = 1, kfact_unit = 1;
    long vfact = 0;
    for (long k = 1; k <= K; ++k) {
        xk = mod(xk * X, pWW);
        long kk = k, vk = 0;
        while (kk % p == 0) {
            kk /= p;
            ++vk;
        }
        vfact += vk;
        kfact_unit = mod(kfact_unit * kk, pWW);
        Int term = xk / pow_ui(p, (unsigned long)vfact);
        term = mod(term * invmod(kfact_unit, pWW), pWW);
        acc = mod(acc + term, pWW);
    }
    Int pW = pow_ui(p, (unsigned long)W);
    return PadicNumber::from_unit(mod(acc, pW), 0, p, W);
}

PadicNumber unit_pow(const PadicNumber& u, const PadicNumber& s) {
    if (u.is_zero() || u.val() != 0) throw NotAUnit("unit_pow of non-unit");
    if (mod(u.unit(), u.p()) != 1)
        throw NotAUnit("unit_pow requires a 1-unit base");
    PadicNumber l = plog(u);
    return padic_exp(l * s);
}

PadicNumber hensel_sqrt(const Int& D, long p, long N, std::optional<long> seed) {
    if (p == 2) throw Ramified("p = 2 is out of scope");
    Int d = mod(D, p);
    if (d == 0) throw Ramified("p divides D");
    if (powmod(d, Int((p - 1) / 2), Int(p)) != 1)
        throw NonResidue("D is not a square mod p");
    long r0 = 0;
    if (seed) {
        long s = ((*seed % p) + p) % p;
        if (mod(Int(s) * s - D, p) != 0)
            throw NonResidue("seed is not a square root of D mod p");
        r0 = s;
    } else {
        for (long s = 1; s < p; ++s)
            if (mod(Int(s) * s - D, p) == 0) {
                r0 = s;
                break;
            }
    }
    // Newton: r <- (r + D/r)/2, doubling accuracy each step
    Int pk = Int(p);
    Int r = r0;
    long prec = 1;
    Int inv2 = invmod(Int(2), pow_ui(p, (unsigned long)N));
    while (prec < N) {
        prec = std::min(2 * prec, N);
        pk = pow_ui(p, (unsigned long)prec);
        r = mod((r + mod(D * invmod(r, pk), pk)) * inv2, pk);
    }
    return PadicNumber::from_unit(r, 0, p, N);
}

}  // namespace padictk
