#include "padictk/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "padictk/bernoulli.hpp"
#include "padictk/hecke_euler.hpp"
#include "padictk/kubota_leopoldt.hpp"
#include "padictk/leading_terms.hpp"
#include "padictk/quad_fields.hpp"
#include "padictk/regions_signs.hpp"

namespace padictk {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;
    long cases = 0;

    void expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            detail << "FIRST FAILURE: " << what;
        }
    }
};

// enumerate every character mod f through the canonical generator images
template <typename Fn>
void for_each_character(long f, Fn&& fn) {
    DirichletCharacter group(f);
    auto gens = group.generator_images();
    std::vector<long> ords;
    for (auto& g : gens) ords.push_back(g.gen_order);
    std::vector<long> idx(ords.size(), 0);
    for (;;) {
        long m = 1;
        for (size_t i = 0; i < ords.size(); ++i)
            if (idx[i]) m = lcm_long(m, ords[i] / gcd_long(ords[i], idx[i]));
        std::vector<std::pair<long, long>> ims;
        for (size_t i = 0; i < ords.size(); ++i)
            ims.push_back({gens[i].g, (long)(((__int128)idx[i] * m / ords[i]) % m)});
        fn(DirichletCharacter::from_generator_images(f, ims, m));
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == ords[k]) idx[k++] = 0;
        if (k == idx.size()) break;
    }
}

// ---- criterion bodies ----

Check crit1_kl_special() {
    Check c;
    auto w2 = DirichletCharacter::omega(5).power(2);
    auto v1 = kl_special(w2, 2, 5, 10);
    c.expect(v1.exact && *v1.exact == Rat(1, 3), "L_5(omega^2,-1) = 1/3");
    auto t = DirichletCharacter::trivial(1);
    auto v2 = kl_special(t, 4, 5, 10);
    c.expect(v2.exact && *v2.exact == Rat(-31, 30), "L_5(1,-3) = -31/30");
    // pinned precision: the embedded values carry 10 digits
    c.expect(v1.value.abs_prec() >= 10, "precision 5^10");
    return c;
}

std::vector<std::pair<long, DirichletCharacter>> regression_pairs() {
    return {
        {5, DirichletCharacter::omega(5).power(2)},
        {5, DirichletCharacter::trivial(1)},
        {7, DirichletCharacter::omega(7).power(2)},
        {7, DirichletCharacter::omega(7).power(4)},
        {7, DirichletCharacter::omega(5).power(2)},  // quadratic mod 5
    };
}

Check crit2_two_constructions() {
    Check c;
    const long N = 10, slack = 2;
    for (auto& [p, chi] : regression_pairs()) {
        for (long n = 1; n <= 6; ++n) {
            auto sp = kl_special(chi, n, p, N);
            auto vv = kl_value(chi, PadicNumber::from_integer(1 - n, p, N + 2), p, N);
            long shared = std::min(vv.abs_prec(), sp.value.abs_prec());
            std::ostringstream what;
            what << "p=" << p << " chi=" << chi.label() << " n=" << n;
            c.expect(shared >= N - slack, what.str() + " precision window");
            c.expect((vv - sp.value).truncated(shared).is_zero(),
                     what.str() + " value match");
        }
    }
    return c;
}

Check crit3_stickelberger_prediction() {
    Check c;
    StickelbergerOptions opts;
    opts.N = 10;
    opts.M = 64;
    opts.budget = 400000000;
    for (auto& [p, chi] : regression_pairs()) {
        // the builder calibrates the variable change at the first two
        // admissible points and re-verifies the rest; a ConventionMismatch
        // would propagate out of here
        KLSeries kl = stickelberger_kl(chi, p, opts);
        long usable = 0;
        for (long n = 3; n <= 6; ++n) {
            auto sp = kl_special(chi, n, p, kl.declared_precision());
            PadicNumber got;
            long den_loss = 0;
            try {
                got = kl.evaluate_int(1 - n);
                if (kl.has_pole()) {
                    auto dv = kl.denominator()->evaluate_int(1 - n);
                    den_loss = dv.is_zero() ? kl.declared_precision() : dv.val();
                }
            } catch (const PoleAtOne&) {
                continue;
            }
            long tol = std::min(got.abs_prec(), sp.value.abs_prec()) - 1 - den_loss;
            if (tol < 1) continue;
            ++usable;
            std::ostringstream what;
            what << "p=" << p << " chi=" << chi.label() << " n=" << n << " ("
                 << tol << " digits)";
            c.expect((got - sp.value).truncated(tol).is_zero(), what.str());
        }
        c.expect(usable >= 3, "enough usable prediction points");
    }
    return c;
}

Check crit4_coates_wiles() {
    Check c;
    for (long cc : {2L, 3L, 5L}) {
        c.expect(coates_wiles(cc, 1, 7, 6).exact == Rat(cc - 1) / 2,
                 "k=1 value (c-1)/2");
        for (long k = 2; k <= 10; ++k) {
            Rat expect =
                (rat_pow(Rat(cc), k) - 1) * bernoulli_number((unsigned long)k) / k;
            std::ostringstream what;
            what << "c=" << cc << " k=" << k;
            c.expect(coates_wiles(cc, k, 7, 6).exact == expect, what.str());
        }
    }
    return c;
}

Check crit5_gauss_norms() {
    Check c;
    for (long f = 1; f <= 50; ++f) {
        for_each_character(f, [&](const DirichletCharacter& chi) {
            if (!chi.is_primitive()) return;
            std::ostringstream what;
            what << "conductor " << f << " " << chi.label();
            c.expect(gauss_norm_squared(chi) == f, what.str());
        });
    }
    return c;
}

Check crit6_class_number_formula() {
    Check c;
    for (long D = -3; D >= -200; --D) {
        if (!is_fundamental_discriminant(D)) continue;
        auto rep = class_number_formula_check(D);
        std::ostringstream what;
        what << "D=" << D << " h=" << rep.h_forms << " B1=" << rep.B1.get_str();
        c.expect(rep.holds, what.str());
    }
    return c;
}

Check crit7_leading_terms() {
    Check c;
    struct RingSpec {
        long p;
        int a, b;
        std::vector<std::vector<std::uint64_t>> pool;
    };
    // fixed 4-element pools per ring: zero, one, a zero-divisor, a non-trivial
    // unit (or x where available)
    std::vector<RingSpec> rings = {
        {2, 2, 1, {{0}, {1}, {2}, {3}}},
        {3, 2, 1, {{0}, {1}, {3}, {5}}},
        {2, 1, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}},
        {2, 2, 2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}}},
    };
    for (const auto& spec : rings) {
        auto R = std::make_shared<ChainRing>(spec.p, spec.a, spec.b);
        std::vector<RingElem> pool;
        for (auto& cv : spec.pool) pool.push_back(RingElem(R, cv));
        // all shapes with s + t <= 3
        for (long s = 1; s <= 3; ++s) {
            for (long t = 0; s + t <= 3; ++t) {
                long cells = s * (s + t);
                long total = 1;
                for (long i = 0; i < cells; ++i) total *= 4;
                for (long mask = 0; mask < total; ++mask) {
                    long mm = mask;
                    std::vector<RingElem> entries;
                    for (long i = 0; i < cells; ++i) {
                        entries.push_back(pool[(size_t)(mm % 4)]);
                        mm /= 4;
                    }
                    FreeMap phi = FreeMap::from_entries(R, s, s + t, entries);
                    auto rep = verify_fitt_stark(phi);
                    if (!rep.equal && c.ok) {
                        std::ostringstream what;
                        what << R->str() << " s=" << s << " t=" << t
                             << " mask=" << mask << ": " << rep.detail;
                        c.expect(false, what.str());
                    } else {
                        ++c.cases;
                    }
                }
            }
        }
        // Matlis bijectivity on 30 presented modules per ring
        std::mt19937_64 rng(0xabcdefULL + (unsigned long)spec.p * 31 +
                            (unsigned long)spec.a * 7 + (unsigned long)spec.b);
        for (int trial = 0; trial < 30; ++trial) {
            long n = 1 + (long)(rng() % 2);
            long m = 1 + (long)(rng() % 2);
            std::vector<RingElem> entries;
            for (long i = 0; i < n * m; ++i)
                entries.push_back(RingElem::from_index(R, rng() % R->size()));
            FreeMap A = FreeMap::from_entries(R, n, m, entries);
            auto rep = bidual_matlis_check(A);
            std::ostringstream what;
            what << R->str() << " matlis trial " << trial;
            c.expect(rep.bijective, what.str());
        }
    }
    return c;
}

Check crit8_euler_identities() {
    Check c;
    auto r1 = verify_identity_8_eq_4x4(1000, 0x8eef44ULL);
    c.expect(r1.samples == 1000 && r1.failures == 0,
             "8 = 4x4 under the derived-BDP reading");
    auto r2 = verify_identity_ad_eq_bdp_times_quad(1000, 0xadbd90ULL);
    c.expect(r2.samples == 1000 && r2.failures == 0,
             "ad = BDP x quadratic under the single-factor reading");
    c.cases += r1.samples + r2.samples - 2;
    return c;
}

Check crit9_sign_tables() {
    Check c;
    auto t1 = selfdual_table(Region2::Ad, +1);
    c.expect(t1.eps_triple == -1 && t1.eps_adjoint == -1, "cell (ad, +1)");
    auto t2 = selfdual_table(Region2::Ad, -1);
    c.expect(t2.eps_triple == -1 && t2.eps_adjoint == +1, "cell (ad, -1)");
    auto t3 = selfdual_table(Region2::F, +1);
    c.expect(t3.eps_triple == +1 && t3.eps_adjoint == +1, "cell (f, +1)");
    auto t4 = selfdual_table(Region2::F, -1);
    c.expect(t4.eps_triple == +1 && t4.eps_adjoint == -1, "cell (f, -1)");
    c.expect(forced_vanishing(+1) == std::set<Region3>{Region3::Balanced},
             "vanishing branch +1");
    c.expect(forced_vanishing(-1) ==
                 std::set<Region3>({Region3::F, Region3::G, Region3::H}),
             "vanishing branch -1");
    return c;
}

Check crit10_padic_core() {
    Check c;
    auto l6 = plog(PadicNumber::from_integer(6, 5, 3));
    c.expect(l6.lift() == 55, "log(6) = 55 mod 125");
    std::mt19937_64 rng(0xc0ffee);
    long done = 0;
    while (done < 500) {
        long p = (rng() % 2) ? 5 : 7;
        Int pN = pow_ui(p, 8);
        Int a = mod(Int((unsigned long)rng()), pN);
        Int b = mod(Int((unsigned long)rng()), pN);
        if (a % p == 0 || b % p == 0) continue;
        auto ua = PadicNumber::from_unit(a, 0, p, 8);
        auto ub = PadicNumber::from_unit(b, 0, p, 8);
        c.expect((plog(ua * ub) - (plog(ua) + plog(ub))).is_zero(),
                 "plog homomorphism");
        ++done;
    }
    done = 0;
    while (done < 500) {
        long p = (rng() % 2) ? 5 : 11;
        long a = (long)(rng() % 1000) + 1;
        if (a % p == 0) continue;
        auto w = teichmuller(a, p, 8);
        Int pN = pow_ui(p, 8);
        c.expect(powmod(w.unit(), Int(p - 1), pN) == 1, "omega^(p-1) = 1");
        c.expect(mod(w.unit() - a, p) == 0, "omega(a) = a mod p");
        ++done;
    }
    return c;
}

}  // namespace

CriterionResult run_criterion(int id) {
    using Clock = std::chrono::steady_clock;
    static const std::vector<std::pair<std::string, Check (*)()>> table = {
        {"kubota-leopoldt special values", crit1_kl_special},
        {"two-construction agreement", crit2_two_constructions},
        {"stickelberger prediction", crit3_stickelberger_prediction},
        {"coates-wiles law", crit4_coates_wiles},
        {"gauss-sum norm", crit5_gauss_norms},
        {"class-number formula", crit6_class_number_formula},
        {"leading-terms identity", crit7_leading_terms},
        {"euler-identity suite", crit8_euler_identities},
        {"sign tables", crit9_sign_tables},
        {"p-adic core", crit10_padic_core},
    };
    if (id < 1 || id > (int)table.size())
        throw MathError("BadInput", "criterion id out of range");
    auto t0 = Clock::now();
    CriterionResult r;
    r.id = id;
    r.name = table[(size_t)(id - 1)].first;
    try {
        Check c = table[(size_t)(id - 1)].second();
        r.pass = c.ok;
        std::ostringstream d;
        d << c.cases << " checks";
        if (!c.ok) d << "; " << c.detail.str();
        r.detail = d.str();
    } catch (const MathError& e) {
        r.pass = false;
        r.detail = std::string("exception ") + e.code() + ": " + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id));
    return out;
}

std::vector<std::pair<std::string, int>> acceptance_suites() {
    return {
        {"kl-special", 1},  {"kl-agreement", 2}, {"stickelberger", 3},
        {"coates-wiles", 4}, {"gauss-norm", 5},  {"class-number", 6},
        {"fitt-stark", 7},  {"euler-identities", 8}, {"sign-tables", 9},
        {"padic-core", 10},
    };
}

}  // namespace padictk
