#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "padictk/errors.hpp"

namespace padictk {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_ui(long base, unsigned long e) { return pow_ui(Int(base), e); }

// x mod m normalized to [0, m)
inline Int mod(const Int& x, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotAUnit("no inverse mod m");
    return r;
}

// p-adic valuation of a nonzero integer
inline long valuation(Int x, const Int& p) {
    if (x == 0) throw ZeroAtPrecision("valuation of exact zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        x = q;
        ++v;
    }
}

inline long valuation(const Rat& x, const Int& p) {
    if (x == 0) throw ZeroAtPrecision("valuation of exact zero");
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()),
                   (unsigned long)e);
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()),
                   (unsigned long)e);
        return r;  // b canonical => r canonical
    }
    if (b == 0) throw ZeroDenominator("0 to a negative power");
    return rat_pow(Rat(1) / b, -e);
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

inline long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

inline long powmod_long(long b, long e, long m) {
    unsigned __int128 r = 1, x = ((b % m) + m) % m;
    while (e) {
        if (e & 1) r = r * x % (unsigned long)m;
        x = x * x % (unsigned long)m;
        e >>= 1;
    }
    return (long)r;
}

// multiplicative order of a mod n (gcd(a,n)=1)
inline long mult_order(long a, long n) {
    if (n == 1) return 1;
    long o = 1;
    long x = ((a % n) + n) % n;
    long y = x;
    while (y != 1 % n) {
        y = (long)((unsigned __int128)y * x % (unsigned long)n);
        ++o;
        if (o > n) throw MathError("Internal", "mult_order diverged");
    }
    return o;
}

inline long phi_long(long n) {
    long r = n;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            r -= r / q;
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<std::pair<long, int>> factorize(long n);

// x = r1 mod m1, x = r2 mod m2 for coprime moduli; result in [0, m1 m2)
long crt_pair(long r1, long m1, long r2, long m2);

// fundamental discriminant test (D = 1 mod 4 squarefree, or 4m with
// m = 2, 3 mod 4 squarefree); D != 1
bool is_fundamental_discriminant(long D);

// Kronecker symbol (a|n), full generality
int kronecker(const Int& a, const Int& n);

// binomial C(n,k) as exact integer (n may be negative; C(n,k)=n(n-1)...(n-k+1)/k!)
Rat binom_rat(const Rat& x, unsigned long k);
Int binom_int(long n, unsigned long k);

}  // namespace padictk
