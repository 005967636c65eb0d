#pragma once

#include <vector>

#include "padictk/padic.hpp"

namespace padictk {

// Truncated element of the Iwasawa algebra Z_p[[T]]: coefficients mod p^N,
// degrees below M.  The generator convention is fixed once and for all:
// gamma is the topological generator with <chi_cyc>(gamma) = u = 1 + p,
// and (1+T) stands for gamma.
//
// A truncation of an infinite series determines the coefficient of T^i of
// any substitution image only up to O(p^{M-i}); evaluate() at points of
// positive valuation stays accurate to min(N, M) digits regardless.
class IwasawaSeries {
public:
    IwasawaSeries(long p, long N, long M);
    static IwasawaSeries from_coeffs(long p, long N, long M, std::vector<Int> c);
    static IwasawaSeries monomial(long p, long N, long M, long degree,
                                  const Int& c = Int(1));

    long p() const { return p_; }
    long N() const { return N_; }
    long M() const { return M_; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(long i) const { return c_[(size_t)i]; }
    const Int& pN() const { return pN_; }

    bool is_zero() const;

    IwasawaSeries operator+(const IwasawaSeries& o) const;
    IwasawaSeries operator-(const IwasawaSeries& o) const;
    IwasawaSeries operator*(const IwasawaSeries& o) const;
    IwasawaSeries operator-() const;
    IwasawaSeries scale(const Int& c) const;
    bool operator==(const IwasawaSeries& o) const;

    // inverse of a series whose constant term is a unit
    IwasawaSeries inverse_unit() const;

    // the same series declared at a coarser precision
    IwasawaSeries at_precision(long N) const;

    // F(u^s - 1) for s in Z_p; precision min(N, M) less division losses
    PadicNumber evaluate(const PadicNumber& s) const;
    PadicNumber evaluate_int(long s) const;
    // F(t) for any t with val(t) >= 1
    PadicNumber evaluate_at(const PadicNumber& t) const;

    // Tw: gamma -> <chi_cyc>(gamma) gamma, i.e. F(u(1+T) - 1)
    IwasawaSeries twist() const;
    // iota: gamma -> gamma^{-1}, i.e. F((1+T)^{-1} - 1)
    IwasawaSeries involution() const;
    // general F(u^eps (1+T)^delta - 1), eps, delta in {+1, -1}
    IwasawaSeries substitute(int u_exp, int t_exp) const;

    struct MuLambda {
        long mu;
        long lambda;          // least index of minimal valuation
        bool lambda_defined;  // false: all shown coefficients at minimal val "mu"
                              // have index >= M ("lambda >= M")
        bool mu_at_precision;  // mu >= N: indistinguishable from 0
    };
    MuLambda mu_lambda() const;

    std::string str(long max_terms = 8) const;

private:
    long p_, N_, M_;
    Int pN_;
    std::vector<Int> c_;
};

// u = 1 + p to precision N
PadicNumber cyclotomic_u(long p, long N);

// u^s - 1 as a PadicNumber, s in Z_p (binomial series in (u-1) = p)
PadicNumber u_pow_minus_one(const PadicNumber& s, long p, long N);

}  // namespace padictk
