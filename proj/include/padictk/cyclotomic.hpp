#pragma once

#include <vector>

#include "padictk/util.hpp"

namespace padictk {

// m-th cyclotomic polynomial over Z (cached); coefficient vector, degree phi(m)
const std::vector<Int>& cyclotomic_polynomial(long m);

// Element of Q(zeta_m) on the power basis 1, zeta, ..., zeta^{phi(m)-1}.
// Reduction by the cyclotomic polynomial keeps the representation canonical.
class CyclotomicElement {
public:
    explicit CyclotomicElement(long m = 1);
    static CyclotomicElement from_rational(const Rat& r, long m = 1);
    static CyclotomicElement zeta_power(long m, long e);

    long order() const { return m_; }
    long degree() const { return (long)c_.size(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rational() const;  // throws unless is_rational()

    CyclotomicElement operator+(const CyclotomicElement& o) const;
    CyclotomicElement operator-(const CyclotomicElement& o) const;
    CyclotomicElement operator*(const CyclotomicElement& o) const;
    CyclotomicElement operator*(const Rat& r) const;
    CyclotomicElement operator-() const;
    bool operator==(const CyclotomicElement& o) const;

    // Galois action zeta -> zeta^t, gcd(t, m) = 1
    CyclotomicElement galois(long t) const;
    // complex conjugation = galois(-1)
    CyclotomicElement conj() const { return galois(-1); }

    // rewrite in Q(zeta_M) for m | M
    CyclotomicElement promote(long M) const;

    std::string str() const;

private:
    long m_;
    std::vector<Rat> c_;
    void add_zeta_power(long e, const Rat& coef);
    friend CyclotomicElement promote_pair(const CyclotomicElement&,
                                          const CyclotomicElement&,
                                          CyclotomicElement&);
};

}  // namespace padictk
