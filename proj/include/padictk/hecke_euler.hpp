#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padictk/util.hpp"

namespace padictk {

// Hecke parameters at p for a p-stabilized eigenform: the roots alpha, beta
// of the Hecke polynomial, the weight, and the nebentype value at p.  In
// arithmetic mode alpha beta = eps_p p^{k-1} with alpha a p-adic unit; the
// evaluator operations accept arbitrary nonzero scalars.
struct HeckeParams {
    long p = 0;
    long k = 2;
    Rat alpha = 1;
    Rat beta = 0;
    Rat eps_p = 1;

    // checked arithmetic-mode constructor
    static HeckeParams arithmetic(long p, long k, const Rat& alpha,
                                  const Rat& eps_p);
    bool is_arithmetic() const;
};

// CM character data: the values at the two primes above p and the weight;
// psi_p * psi_pbar = eps_p p^{w-1} in arithmetic mode
struct CMChar {
    long p = 0;
    long w = 2;
    Rat psi_p = 0;     // Psi(p-prime chosen by iota_p)
    Rat psi_pbar = 1;  // Psi(conjugate prime), the unit member
    Rat eps_p = 1;

    static CMChar arithmetic(long p, long w, const Rat& psi_pbar,
                             const Rat& eps_p);
    // the associated Hecke parameters: alpha the valuation-0 member
    HeckeParams hecke() const;
    Rat a_p() const { return psi_p + psi_pbar; }
};

// the two CM characters feeding a BDP-type pair (g_lambda, h_mu)
struct CMParams {
    CMChar g;
    CMChar h;
};

// labeled linear factor of a modified Euler product
struct EulerFactor {
    std::string label;
    Rat value;
    int exponent;
};

struct EulerProduct {
    std::vector<EulerFactor> factors;
    Rat value = 1;  // product of value^exponent
};

EulerProduct make_product(std::vector<EulerFactor> factors);

// E(f, ad) = (1 - beta/alpha)(1 - beta/(p alpha))
EulerProduct euler_adjoint(const HeckeParams& f);

enum class Dominance { F, G };

// the four-factor degree-4 modified Euler factor at s = j; `dom` selects
// which form dominates (the two branches exchange the roles)
EulerProduct euler_deg4(const HeckeParams& f, const HeckeParams& g, long j,
                        Dominance dom);

enum class TripleRegion { FDominant, Balanced };

// the eight-squared-linear-factor triple-product Euler factor at the
// central point c; g/h-dominant variants come from relabeling the inputs
EulerProduct euler_triple(const HeckeParams& f, const HeckeParams& g,
                          const HeckeParams& h, long c, TripleRegion region,
                          bool squared = true);

enum class BDPVariant { Phi, PhiPrime };

// the tabulated two-squared-factor shapes of the BDP Euler factors, with
// the g/h parameters induced from the CM data
EulerProduct euler_bdp(const HeckeParams& f, const CMParams& cm, long c,
                       BDPVariant variant);

// the theta-series Hecke parameters of the Phi / Phi' ratio characters:
//   alpha_Phi  = alpha_g alpha_h,            beta_Phi  = beta_g beta_h
//   alpha_Phi' = alpha_g beta_h / p^{w_h-1}, beta_Phi' = beta_g alpha_h / p^{w_h-1}
HeckeParams phi_theta_params(const CMParams& cm);
HeckeParams phi_prime_theta_params(const CMParams& cm);

// derived BDP Euler factor: the degree-4 factor of f x theta(Phi) at its
// central point, theta-dominant branch (collapses to two squared factors)
EulerProduct euler_bdp_derived(const HeckeParams& f, const CMParams& cm,
                               BDPVariant variant, bool squared = true);

// three-factor adjoint Euler factors at s = k/2
enum class AdjointBranch { F, Ad };
EulerProduct euler_adjoint6(const HeckeParams& f, const HeckeParams& g,
                            AdjointBranch branch);

// ------------------------------------------------------------------ reports

struct IdentityReport {
    long samples = 0;
    long agreements = 0;
    long failures = 0;
    // factor multiset difference of the first failing sample (empty under
    // the derived reading; nonempty under the tabulated BDP shapes)
    std::vector<std::string> lhs_only;
    std::vector<std::string> rhs_only;
    std::string convention;  // the reading that verified
    bool exact() const { return failures == 0 && samples > 0; }
};

// degree-8 = 4 x 4: the inner-squared triple factor against the product of
// the two derived BDP factors; also diffs the tabulated BDP shapes against
// the derived ones
IdentityReport verify_identity_8_eq_4x4(long sample_count, std::uint64_t seed);

// E^ad(f (x) ad0 g, k/2) = E^{Phi(Theta)}(f (x) Phi(Theta), c) * E_p(f (x) eps_K, k/2)
// on the lambda = mu diagonal with eps_K(p) = +1; solves for the residual
// quadratic factor and tests it against the candidate shapes
IdentityReport verify_identity_ad_eq_bdp_times_quad(long sample_count,
                                                    std::uint64_t seed);

}  // namespace padictk
