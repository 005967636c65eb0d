#pragma once

#include <map>
#include <optional>

#include "padictk/dirichlet.hpp"
#include "padictk/iwasawa.hpp"

namespace padictk {

// value of the Kubota-Leopoldt function together with its exact rational
// form whenever all data lie in Q
struct KLValue {
    PadicNumber value;
    std::optional<Rat> exact;
};

// L_p(chi, 1-n) = -(1 - psi(p) p^{n-1}) B_{n,psi}/n with psi the primitive
// character of chi * omega^{-n}; chi must be even
KLValue kl_special(const DirichletCharacter& chi, long n, long p, long N);

// evaluator at arbitrary s in Z_p: the convergent Washington sum over
// a in [1,F], p coprime to a, F = lcm(f, p), written in the pole-free
// rearrangement; its correctness is pinned to kl_special by the tests
PadicNumber kl_value(const DirichletCharacter& chi, const PadicNumber& s, long p,
                     long N);

// --- Stickelberger tower (exact, desk-scale levels) ---

// Theta_n = sum_{a in (Z/Q)^*} (a/Q - 1/2) sigma_a^{-1},  Q = f p^{n+1}
class StickelbergerElement {
public:
    StickelbergerElement(long f, long p, long level);

    long level() const { return level_; }
    long modulus() const { return Q_; }
    // coefficient of sigma_a^{-1}
    Rat coeff(long a) const;
    // sum over the group (0 whenever f > 1)
    Rat coefficient_sum() const;
    // projection to level-1 (coefficientwise fiber sums); exact
    StickelbergerElement norm_projection() const;
    bool operator==(const StickelbergerElement& o) const;

    // exact psi-projection onto the Gamma_n-grading: bucket e collects
    // sum of psi^{-1}(tame part) * coeff over group elements with
    // <a> = (1+p)^e; values in Q(zeta_ord(psi))
    std::vector<CyclotomicElement> project(const DirichletCharacter& psi) const;

private:
    long f_, p_, level_, Q_;
};

// frozen variable-change convention per prime; the raw group-ring series
// is matched against kl_special at n = 1, 2 over the four candidates
// T -> u^{e1}(1+T)^{e2} - 1 and the unique match is cached
struct StickelbergerConvention {
    int u_exp;  // +1 or -1
    int t_exp;  // +1 or -1
};

struct StickelbergerOptions {
    long N = 8;            // requested coefficient precision
    long M = 32;           // truncation order
    long max_level = 0;    // 0: choose from the budget
    long budget = 400000000;  // bound on p^level * M expansion work
    long smoothing_c = 0;  // 0: least admissible odd c >= 3
};

// Kubota-Leopoldt p-adic L-function as an Iwasawa series built from the
// c-smoothed Stickelberger tower.  For nontrivial characters the smoothing
// factor is divided away and `series` is the honest object; the trivial
// character keeps its pole as an explicit denominator.
class KLSeries {
public:
    const IwasawaSeries& numerator() const { return num_; }
    const std::optional<IwasawaSeries>& denominator() const { return den_; }
    long declared_precision() const { return num_.N(); }
    long level() const { return level_; }
    StickelbergerConvention convention() const { return conv_; }
    long smoothing_c() const { return c_; }

    bool has_pole() const { return den_.has_value(); }
    // the Lambda-element itself; throws PoleAtOne for the zeta branch
    const IwasawaSeries& series() const;

    PadicNumber evaluate(const PadicNumber& s) const;
    PadicNumber evaluate_int(long s) const;

    KLSeries twist() const;
    KLSeries involution() const;
    KLSeries operator*(const KLSeries& o) const;

    IwasawaSeries::MuLambda mu_lambda() const { return series().mu_lambda(); }

private:
    friend KLSeries stickelberger_kl(const DirichletCharacter&, long,
                                     const StickelbergerOptions&);
    friend class GrossFactorization;
    IwasawaSeries num_{5, 1, 1};
    std::optional<IwasawaSeries> den_;
    StickelbergerConvention conv_{+1, +1};
    long level_ = 0;
    long c_ = 0;
};

// builds the series for an even character whose prime-to-p part is tame
// (p coprime to its conductor) and whose order divides p-1 after removing
// the omega-part; calibrates or checks the per-p convention
KLSeries stickelberger_kl(const DirichletCharacter& chi, long p,
                          const StickelbergerOptions& opts = {});

// spec-facing wrapper: the Lambda-element for even nontrivial chi
IwasawaSeries stickelberger_series(const DirichletCharacter& chi, long p,
                                   const StickelbergerOptions& opts = {});

// the calibration cache (inspectable for CLI metadata)
std::optional<StickelbergerConvention> frozen_convention(long p);
void reset_conventions();  // test hook

// --- Coates-Wiles values on the cyclotomic-unit Coleman series ---

// D^k log g_c at T = 0 with g_c = ((1+T)^c - 1)/T and D = (1+T) d/dT,
// computed by exact series expansion; equals (c^k - 1) B_k / k for k >= 2
// and (c-1)/2 for k = 1
struct ColemanValue {
    Rat exact;
    PadicNumber padic;
};
ColemanValue coates_wiles(long c, long k, long p, long N);

// --- Gross right-hand side ---

// L_p^KL(chi^{-1}) * Tw(L_p^KL(chi eps_K omega))^iota as a quotient pair;
// requires p split in Q(sqrt D)
class GrossFactorization {
public:
    GrossFactorization(const DirichletCharacter& chi, long D, long p,
                       const StickelbergerOptions& opts = {});

    const KLSeries& factor_one() const { return f1_; }        // L_p(chi^{-1})
    const KLSeries& factor_two_raw() const { return f2_; }    // before Tw, iota
    const KLSeries& product() const { return prod_; }

    PadicNumber evaluate(const PadicNumber& s) const { return prod_.evaluate(s); }
    PadicNumber evaluate_int(long s) const { return prod_.evaluate_int(s); }
    const IwasawaSeries& series() const { return prod_.series(); }

private:
    KLSeries f1_, f2_, prod_;
};

}  // namespace padictk
