#include "padictk/hecke_euler.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace padictk {

namespace {

Rat ppow(long p, long e) { return rat_pow(Rat(p), e); }

EulerFactor lin(const std::string& label, const Rat& num_over_den_minus,
                int exponent = 1) {
    return {label, Rat(1) - num_over_den_minus, exponent};
}

Rat safe_div(const Rat& a, const Rat& b, const char* what) {
    if (b == 0) throw ZeroDenominator(what);
    return a / b;
}

}  // namespace

HeckeParams HeckeParams::arithmetic(long p, long k, const Rat& alpha,
                                    const Rat& eps_p) {
    if (alpha == 0) throw ZeroAlpha("arithmetic-mode alpha must be nonzero");
    HeckeParams f;
    f.p = p;
    f.k = k;
    f.alpha = alpha;
    f.eps_p = eps_p;
    f.beta = safe_div(eps_p * ppow(p, k - 1), alpha, "alpha");
    if (!f.is_arithmetic()) throw MathError("BadInput", "alpha not a p-unit");
    return f;
}

bool HeckeParams::is_arithmetic() const {
    if (alpha == 0 || beta == 0) return false;
    return valuation(alpha, Int(p)) == 0 &&
           alpha * beta == eps_p * ppow(p, k - 1);
}

CMChar CMChar::arithmetic(long p, long w, const Rat& psi_pbar, const Rat& eps_p) {
    if (psi_pbar == 0) throw ZeroAlpha("psi_pbar must be nonzero");
    CMChar c;
    c.p = p;
    c.w = w;
    c.psi_pbar = psi_pbar;
    c.eps_p = eps_p;
    c.psi_p = safe_div(eps_p * ppow(p, w - 1), psi_pbar, "psi_pbar");
    if (valuation(psi_pbar, Int(p)) != 0)
        throw MathError("BadInput", "psi_pbar not a p-unit");
    return c;
}

HeckeParams CMChar::hecke() const {
    HeckeParams f;
    f.p = p;
    f.k = w;
    f.eps_p = eps_p;
    bool pbar_unit = psi_pbar != 0 && valuation(psi_pbar, Int(p)) == 0;
    f.alpha = pbar_unit ? psi_pbar : psi_p;
    f.beta = pbar_unit ? psi_p : psi_pbar;
    return f;
}

EulerProduct make_product(std::vector<EulerFactor> factors) {
    EulerProduct e;
    e.factors = std::move(factors);
    for (const auto& f : e.factors) e.value *= rat_pow(f.value, f.exponent);
    return e;
}

EulerProduct euler_adjoint(const HeckeParams& f) {
    if (f.alpha == 0) throw ZeroAlpha("euler_adjoint");
    return make_product({
        lin("1 - b/a", safe_div(f.beta, f.alpha, "alpha")),
        lin("1 - b/(pa)", safe_div(f.beta, Rat(f.p) * f.alpha, "p alpha")),
    });
}

EulerProduct euler_deg4(const HeckeParams& f, const HeckeParams& g, long j,
                        Dominance dom) {
    const HeckeParams& A = dom == Dominance::F ? f : g;
    const HeckeParams& B = dom == Dominance::F ? g : f;
    long p = f.p;
    Rat pj1 = ppow(p, j - 1);
    Rat pj = ppow(p, j);
    return make_product({
        lin("1 - p^{j-1}/(aA aB)", safe_div(pj1, A.alpha * B.alpha, "alpha alpha")),
        lin("1 - p^{j-1}/(aA bB)", safe_div(pj1, A.alpha * B.beta, "alpha beta")),
        lin("1 - bA aB/p^j", safe_div(A.beta * B.alpha, pj, "p^j")),
        lin("1 - bA bB/p^j", safe_div(A.beta * B.beta, pj, "p^j")),
    });
}

EulerProduct euler_triple(const HeckeParams& f, const HeckeParams& g,
                          const HeckeParams& h, long c, TripleRegion region,
                          bool squared) {
    long p = f.p;
    Rat pc = ppow(p, c);
    int e = squared ? 2 : 1;
    if (region == TripleRegion::FDominant) {
        return make_product({
            {"1 - bf ag ah/p^c", 1 - safe_div(f.beta * g.alpha * h.alpha, pc, "p^c"), e},
            {"1 - bf ag bh/p^c", 1 - safe_div(f.beta * g.alpha * h.beta, pc, "p^c"), e},
            {"1 - bf bg ah/p^c", 1 - safe_div(f.beta * g.beta * h.alpha, pc, "p^c"), e},
            {"1 - bf bg bh/p^c", 1 - safe_div(f.beta * g.beta * h.beta, pc, "p^c"), e},
        });
    }
    return make_product({
        {"1 - af bg bh/p^c", 1 - safe_div(f.alpha * g.beta * h.beta, pc, "p^c"), e},
        {"1 - bf ag bh/p^c", 1 - safe_div(f.beta * g.alpha * h.beta, pc, "p^c"), e},
        {"1 - bf bg ah/p^c", 1 - safe_div(f.beta * g.beta * h.alpha, pc, "p^c"), e},
        {"1 - bf bg bh/p^c", 1 - safe_div(f.beta * g.beta * h.beta, pc, "p^c"), e},
    });
}

EulerProduct euler_bdp(const HeckeParams& f, const CMParams& cm, long c,
                       BDPVariant variant) {
    long p = f.p;
    Rat pc = ppow(p, c);
    HeckeParams g = cm.g.hecke();
    HeckeParams h = cm.h.hecke();
    if (variant == BDPVariant::Phi) {
        return make_product({
            {"1 - bf bg ah/p^c", 1 - safe_div(f.beta * g.beta * h.alpha, pc, "p^c"), 2},
            {"1 - bf bg bh/p^c", 1 - safe_div(f.beta * g.beta * h.beta, pc, "p^c"), 2},
        });
    }
    return make_product({
        {"1 - af bg bh/p^c", 1 - safe_div(f.alpha * g.beta * h.beta, pc, "p^c"), 2},
        {"1 - bf bg bh/p^c", 1 - safe_div(f.beta * g.beta * h.beta, pc, "p^c"), 2},
    });
}

HeckeParams phi_theta_params(const CMParams& cm) {
    HeckeParams g = cm.g.hecke(), h = cm.h.hecke();
    HeckeParams out;
    out.p = g.p;
    out.k = cm.g.w + cm.h.w - 1;
    out.alpha = g.alpha * h.alpha;
    out.beta = g.beta * h.beta;
    out.eps_p = g.eps_p * h.eps_p;
    return out;
}

HeckeParams phi_prime_theta_params(const CMParams& cm) {
    HeckeParams g = cm.g.hecke(), h = cm.h.hecke();
    HeckeParams out;
    out.p = g.p;
    out.k = cm.g.w - cm.h.w + 1;
    Rat pw = ppow(g.p, cm.h.w - 1);
    out.alpha = safe_div(g.alpha * h.beta, pw, "p^{w-1}");
    out.beta = safe_div(g.beta * h.alpha, pw, "p^{w-1}");
    out.eps_p = g.eps_p * h.eps_p;
    return out;
}

EulerProduct euler_bdp_derived(const HeckeParams& f, const CMParams& cm,
                               BDPVariant variant, bool squared) {
    long p = f.p;
    HeckeParams th = variant == BDPVariant::Phi ? phi_theta_params(cm)
                                                : phi_prime_theta_params(cm);
    long cpt = variant == BDPVariant::Phi
                   ? (f.k + cm.g.w + cm.h.w) / 2 - 1
                   : (f.k + cm.g.w - cm.h.w) / 2;
    // theta-dominant branch of the degree-4 factor at the central point
    EulerProduct four = euler_deg4(f, th, cpt, Dominance::G);
    if (squared) return four;
    // the four factors pair into two equal squares; keep one of each pair
    EulerProduct out;
    // pair (0,3) and (1,2) coincide as rational numbers
    if (four.factors[0].value != four.factors[3].value ||
        four.factors[1].value != four.factors[2].value)
        throw MathError("Internal", "BDP factors did not pair into squares");
    out.factors = {four.factors[0], four.factors[1]};
    out.value = four.factors[0].value * four.factors[1].value;
    return out;
}

EulerProduct euler_adjoint6(const HeckeParams& f, const HeckeParams& g,
                            AdjointBranch branch) {
    long p = f.p;
    if (f.k % 2 != 0) throw MathError("BadInput", "k must be even for s = k/2");
    Rat pk2 = ppow(p, f.k / 2);
    if (branch == AdjointBranch::F) {
        return make_product({
            lin("1 - bf ag/(p^{k/2} bg)",
                safe_div(f.beta * g.alpha, pk2 * g.beta, "p^{k/2} beta_g")),
            lin("1 - bf/p^{k/2}", safe_div(f.beta, pk2, "p^{k/2}")),
            lin("1 - bf bg/(p^{k/2} ag)",
                safe_div(f.beta * g.beta, pk2 * g.alpha, "p^{k/2} alpha_g")),
        });
    }
    return make_product({
        lin("1 - af bg/(p^{k/2} ag)",
            safe_div(f.alpha * g.beta, pk2 * g.alpha, "p^{k/2} alpha_g")),
        lin("1 - bf/p^{k/2}", safe_div(f.beta, pk2, "p^{k/2}")),
        lin("1 - bf bg/(p^{k/2} ag)",
            safe_div(f.beta * g.beta, pk2 * g.alpha, "p^{k/2} alpha_g")),
    });
}

// --------------------------------------------------------------- verifiers

namespace {

Rat random_unit_rat(std::mt19937_64& rng, long p) {
    for (;;) {
        long num = (long)(rng() % 4001) - 2000;
        long den = (long)(rng() % 2000) + 1;
        if (num == 0) continue;
        if (num % p == 0 || den % p == 0) continue;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
}

void multiset_diff(const std::vector<EulerFactor>& lhs,
                   const std::vector<EulerFactor>& rhs,
                   std::vector<std::string>& lhs_only,
                   std::vector<std::string>& rhs_only) {
    std::vector<std::pair<Rat, std::string>> L, R;
    for (const auto& f : lhs)
        for (int i = 0; i < f.exponent; ++i) L.push_back({f.value, f.label});
    for (const auto& f : rhs)
        for (int i = 0; i < f.exponent; ++i) R.push_back({f.value, f.label});
    for (auto& [v, lab] : L) {
        auto it = std::find_if(R.begin(), R.end(),
                               [&](const auto& x) { return x.first == v; });
        if (it != R.end())
            R.erase(it);
        else
            lhs_only.push_back(lab);
    }
    for (auto& [v, lab] : R) rhs_only.push_back(lab);
}

}  // namespace

IdentityReport verify_identity_8_eq_4x4(long sample_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    IdentityReport rep;
    rep.convention =
        "inner-squared triple factor; BDP factors derived from the degree-4 "
        "factor at the theta-dominant branch";
    long primes[] = {5, 7, 11, 13};
    while (rep.samples < sample_count) {
        long p = primes[rng() % 4];
        // g-dominant weights with even sum: l >= k + m
        long k = 2 + (long)(rng() % 4);
        long m = 1 + (long)(rng() % 4);
        long l = k + m + (long)(rng() % 5);
        if ((k + l + m) % 2 != 0) ++l;
        long c = (k + l + m) / 2 - 1;
        Rat ef = (rng() % 2) ? 1 : -1;
        Rat eg = (rng() % 2) ? 1 : -1;
        Rat eh = ef * eg;  // self-duality: ef eg eh = 1
        HeckeParams f, g, h;
        CMParams cm;
        try {
            f = HeckeParams::arithmetic(p, k, random_unit_rat(rng, p), ef);
            cm.g = CMChar::arithmetic(p, l, random_unit_rat(rng, p), eg);
            cm.h = CMChar::arithmetic(p, m, random_unit_rat(rng, p), eh);
            g = cm.g.hecke();
            h = cm.h.hecke();
        } catch (const MathError&) {
            continue;
        }
        ++rep.samples;
        // LHS: the inner-squared E_p^g(f x g x h, c), i.e. the f-dominant
        // formula with f and g exchanged
        EulerProduct lhs = euler_triple(g, f, h, c, TripleRegion::FDominant, true);
        EulerProduct phi = euler_bdp_derived(f, cm, BDPVariant::Phi, true);
        EulerProduct phip = euler_bdp_derived(f, cm, BDPVariant::PhiPrime, true);
        if (lhs.value == phi.value * phip.value) {
            ++rep.agreements;
        } else {
            ++rep.failures;
            if (rep.lhs_only.empty() && rep.rhs_only.empty()) {
                auto rhs_factors = phi.factors;
                rhs_factors.insert(rhs_factors.end(), phip.factors.begin(),
                                   phip.factors.end());
                multiset_diff(lhs.factors, rhs_factors, rep.lhs_only, rep.rhs_only);
            }
        }
        // the tabulated BDP shapes differ from the derived ones by a label
        // swap and one alpha/beta slip; diff them once for the report
        if (rep.samples == 1) {
            EulerProduct disp_phi = euler_bdp(f, cm, c, BDPVariant::Phi);
            auto d1 = euler_bdp_derived(f, cm, BDPVariant::Phi, true);
            std::vector<std::string> lo, ro;
            multiset_diff(disp_phi.factors, d1.factors, lo, ro);
            if (!lo.empty() || !ro.empty()) {
                rep.convention +=
                    "; tabulated Phi-shape differs from the derived one";
            }
        }
    }
    return rep;
}

IdentityReport verify_identity_ad_eq_bdp_times_quad(long sample_count,
                                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    IdentityReport rep;
    rep.convention =
        "E^ad = [unsquared Phi-side] * (1 - eps_K(p) beta_f / p^{k/2}); the "
        "two-factor candidate equals the square of the residual when eps_f = 1";
    long primes[] = {5, 7, 11, 13};
    while (rep.samples < sample_count) {
        long p = primes[rng() % 4];
        long k = 2 * (1 + (long)(rng() % 4));  // even weight
        long l = k / 2 + 1 + (long)(rng() % 4);  // 2l > k: the ad-branch
        HeckeParams f;
        CMParams cm;
        try {
            f = HeckeParams::arithmetic(p, k, random_unit_rat(rng, p), Rat(1));
            Rat eg = (rng() % 2) ? 1 : -1;
            cm.g = CMChar::arithmetic(p, l, random_unit_rat(rng, p), eg);
            // h = g^c: the conjugate family's parameters
            cm.h = cm.g;
            cm.h.psi_p = cm.g.psi_p / eg;
            cm.h.psi_pbar = cm.g.psi_pbar / eg;
            cm.h.eps_p = 1 / eg;
        } catch (const MathError&) {
            continue;
        }
        HeckeParams g = cm.g.hecke();
        EulerProduct ad = euler_adjoint6(f, g, AdjointBranch::Ad);
        if (ad.value == 0) {
            // uninformative: both sides vanish; resample
            continue;
        }
        ++rep.samples;
        EulerProduct phi_unsq = euler_bdp_derived(f, cm, BDPVariant::Phi, false);
        if (phi_unsq.value == 0) {
            --rep.samples;
            continue;
        }
        Rat residual = ad.value / phi_unsq.value;
        // candidate shapes at j = k/2 with eps_K(p) = +1 (split)
        Rat pj = rat_pow(Rat(p), k / 2);
        Rat single = 1 - f.beta / pj;
        Rat twofold = (1 - rat_pow(Rat(p), k / 2 - 1) / f.alpha) * single;
        bool ok = residual == single && twofold == single * single;
        if (ok)
            ++rep.agreements;
        else {
            ++rep.failures;
            if (rep.lhs_only.empty()) {
                std::ostringstream os;
                os << "residual " << residual.get_str() << " vs single "
                   << single.get_str();
                rep.lhs_only.push_back(os.str());
            }
        }
    }
    return rep;
}

}  // namespace padictk
