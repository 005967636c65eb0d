#include "padictk/util.hpp"

namespace padictk {

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            f.emplace_back(q, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

long crt_pair(long r1, long m1, long r2, long m2) {
    r1 = ((r1 % m1) + m1) % m1;
    r2 = ((r2 % m2) + m2) % m2;
    if (m1 == 1) return r2;
    if (m2 == 1) return r1;
    long inv = -1;
    for (long k = 0; k < m1; ++k)
        if ((__int128)k * m2 % m1 == 1) {
            inv = k;
            break;
        }
    if (inv < 0) throw MathError("BadInput", "crt moduli not coprime");
    long d = ((r1 - r2) % m1 + m1) % m1;
    return (long)((r2 + (__int128)m2 * ((__int128)d * inv % m1)) % ((__int128)m1 * m2));
}

static bool squarefree(long n) {
    for (long q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0) return false;
    return true;
}

bool is_fundamental_discriminant(long D) {
    if (D == 1 || D == 0) return false;
    long r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D < 0 ? -D : D);
    if (r != 0) return false;
    long m = D / 4;
    long mr = ((m % 4) + 4) % 4;
    return (mr == 2 || mr == 3) && squarefree(m < 0 ? -m : m);
}

Rat binom_rat(const Rat& x, unsigned long k) {
    Rat r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= (x - (long)i) / Rat((long)(i + 1));
    return r;
}

Int binom_int(long n, unsigned long k) {
    Rat r = binom_rat(Rat(n), k);
    return r.get_num();  // denominator is 1 for integer n
}

}  // namespace padictk
