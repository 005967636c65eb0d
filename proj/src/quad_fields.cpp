#include "padictk/quad_fields.hpp"

#include <array>
#include <cmath>

namespace padictk {

QuadField::QuadField(long D) : D_(D) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw NotFundamental("QuadField needs a fundamental discriminant < 0");
    omega_ = D == -3 ? 6 : (D == -4 ? 4 : 2);
    // reduced primitive forms (a, b, c): b^2 - 4ac = D, |b| <= a <= c,
    // b >= 0 when |b| = a or a = c
    long bound = (long)std::sqrt((double)(-D) / 3.0) + 1;
    for (long a = 1; a <= bound; ++a) {
        for (long b = -a; b <= a; ++b) {
            long num = (long)b * b - D;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if ((b < 0) && ((-b == a) || (a == c))) continue;
            if (gcd_long(gcd_long(a, b < 0 ? -b : b), c) != 1) continue;
            forms_.push_back({a, b, c});
        }
    }
    h_ = (long)forms_.size();
}

DirichletCharacter QuadField::kronecker_char() const {
    return DirichletCharacter::kronecker_character(D_);
}

long class_number(long D) { return QuadField(D).class_number(); }

ClassNumberFormulaReport class_number_formula_check(long D) {
    QuadField K(D);
    auto eps = K.kronecker_char();
    Rat B1 = gen_bernoulli(1, eps).to_rational();
    Rat absB1 = B1 < 0 ? -B1 : B1;
    ClassNumberFormulaReport rep;
    rep.D = D;
    rep.h_forms = K.class_number();
    rep.omega = K.torsion_order();
    rep.B1 = B1;
    rep.holds = Rat(rep.h_forms) == Rat(rep.omega) * absB1 / 2;
    return rep;
}

PiLogResult pi_log(long D, long p, long N) {
    QuadField K(D);
    if (!K.splits(p)) throw NotSplit("p is not split in Q(sqrt D)");
    long h = K.class_number();
    Int ph = pow_ui(p, (unsigned long)h);

    // elements (a + b sqrt m)/denom, norm (a^2 - m b^2)/denom^2 = p^h,
    // skipping p-divisible x so the ideal is a power of a single prime
    long m, denom;
    if (((D % 4) + 4) % 4 == 0) {
        m = D / 4;
        denom = 1;
    } else {
        m = D;
        denom = 2;
    }
    long bound = 4 * (long)mpz_get_ui(ph.get_mpz_t());
    PadicNumber root = hensel_sqrt(m, p, N);  // least-seed branch: iota_p
    for (long b = 0; b <= bound; ++b) {
        Int target = Int(denom) * Int(denom) * ph + Int(m) * b * b;  // a^2
        if (target < 0) break;
        if (!mpz_perfect_square_p(target.get_mpz_t())) continue;
        Int a;
        mpz_sqrt(a.get_mpz_t(), target.get_mpz_t());
        if (denom == 2 && mod(a - b, 2) != 0) continue;
        if (a == 0 && b == 0) continue;
        // exclude p | x (mixed ideal p^i pbar^j)
        // x = (a + b root)/denom; p | x iff p | a and p | b (p odd, p unramified)
        if (mod(a, p) == 0 && b % p == 0) continue;
        PadicNumber num = PadicNumber::from_integer(a, p, N) +
                          PadicNumber::from_integer(b, p, N) * root;
        PadicNumber x = num.scale(Rat(1, denom));
        PiLogResult out;
        out.denom = denom;
        out.conjugated = false;
        if (x.is_zero() || x.val() > 0) {
            // the found generator sits over the other prime; its conjugate
            // (a - b sqrt m)/denom is the p-adic unit
            num = PadicNumber::from_integer(a, p, N) -
                  PadicNumber::from_integer(b, p, N) * root;
            x = num.scale(Rat(1, denom));
            out.conjugated = true;
        }
        if (x.is_zero() || x.val() != 0)
            throw MathError("Internal", "norm p^h element is not prime-primary");
        out.a = (long)mpz_get_si(Int(a).get_mpz_t());
        out.b = b;
        out.u_embedded = x;
        out.log_u = plog(x);
        return out;
    }
    throw SearchExhausted("no norm p^h element within the documented bound");
}

}  // namespace padictk
