#pragma once

#include <memory>
#include <vector>

#include "padictk/padic.hpp"
#include "padictk/util.hpp"

namespace padictk {

class UnramifiedElement;

// The degree-d unramified extension Z_p[x]/(F) with F the canonical
// Hensel-lifted irreducible factor of the m-th cyclotomic polynomial mod p
// (p coprime to m, d = multiplicative order of p mod m).  The factor is
// selected deterministically: least key ((-1)^d F(0) mod p, F_1, ..., F_{d-1});
// for d = 1 this picks the least primitive m-th root of unity mod p, in
// agreement with the default hensel_sqrt seed.
class UnramifiedField : public std::enable_shared_from_this<UnramifiedField> {
public:
    static std::shared_ptr<const UnramifiedField> make(long p, long m, long N);

    long p() const { return p_; }
    long m() const { return m_; }
    long N() const { return N_; }
    long degree() const { return d_; }
    const std::vector<Int>& modulus_poly() const { return F_; }
    const Int& pN() const { return pN_; }

    UnramifiedElement zero() const;
    UnramifiedElement one() const;
    UnramifiedElement zeta() const;  // image of zeta_m (class of x)
    UnramifiedElement from_coeffs(std::vector<Int> c, long val = 0) const;

    // the root of F in Z_p when d = 1
    PadicNumber root_qp() const;

private:
    UnramifiedField(long p, long m, long N);
    long p_, m_, N_, d_;
    Int pN_;
    std::vector<Int> F_;  // monic, size d+1, coeffs in [0, p^N)
};

// canonical primitive m-th root of unity mod p^N when ord_m(p) = 1
PadicNumber canonical_root_of_unity(long m, long p, long N);

// Element p^val * (c_0 + c_1 x + ... + c_{d-1} x^{d-1}) of the fraction
// field of Z_p[x]/(F), coefficients mod p^N.
class UnramifiedElement {
public:
    UnramifiedElement() = default;

    const std::shared_ptr<const UnramifiedField>& field() const { return K_; }
    long val_shift() const { return val_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;

    UnramifiedElement operator+(const UnramifiedElement& o) const;
    UnramifiedElement operator-(const UnramifiedElement& o) const;
    UnramifiedElement operator*(const UnramifiedElement& o) const;
    UnramifiedElement operator-() const;
    UnramifiedElement inverse() const;
    UnramifiedElement pow(const Int& e) const;
    bool operator==(const UnramifiedElement& o) const;

    UnramifiedElement scale(const Rat& r) const;  // p-free denominator or val shift

    // the element as a PadicNumber when it lies in Z_p (throws otherwise)
    PadicNumber as_qp() const;

    std::string str() const;

private:
    friend class UnramifiedField;
    std::shared_ptr<const UnramifiedField> K_;
    long val_ = 0;
    std::vector<Int> c_;
    void normalize();
};

}  // namespace padictk
