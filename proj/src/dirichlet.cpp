#include "padictk/dirichlet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "padictk/bernoulli.hpp"

namespace padictk {

namespace {

long least_primitive_root(long q, int e) {
    // least primitive root mod q^e for odd prime q
    long qe = 1;
    for (int i = 0; i < e; ++i) qe *= q;
    long phi = qe / q * (q - 1);
    auto fac = factorize(phi);
    for (long g = 2;; ++g) {
        if (g % q == 0) continue;
        bool ok = true;
        for (auto& [r, _] : fac)
            if (powmod_long(g, phi / r, qe) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

long crt_lift(long r, long mod_small, long f) {
    // x = r mod mod_small, x = 1 mod f/mod_small
    long other = f / mod_small;
    if (other == 1) return ((r % f) + f) % f;
    long inv = 0;
    for (long k = 0; k < mod_small; ++k)
        if ((k * other) % mod_small == 1) {
            inv = k;
            break;
        }
    long x = (1 + other * ((((r - 1) % mod_small + mod_small) % mod_small * inv) % mod_small)) % f;
    return ((x % f) + f) % f;
}

long mobius(long n) {
    long m = 1;
    for (auto& [q, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
        (void)q;
    }
    return m;
}

// Ramanujan sum c_f(n) = sum_{d | gcd(n, f)} d * mu(f/d)
long ramanujan_sum(long f, long n) {
    long g = gcd_long(f, ((n % f) + f) % f);
    if (g == 0) g = f;
    long s = 0;
    for (long d = 1; d * d <= g; ++d) {
        if (g % d != 0) continue;
        for (long dd : {d, g / d}) {
            if (dd == d && dd != g / d && false) continue;
            s += dd * mobius(f / dd);
            if (d == g / d) break;
        }
    }
    return s;
}

}  // namespace

void DirichletCharacter::build_components() {
    comps_.clear();
    long f = f_;
    for (auto& [q, e] : factorize(f)) {
        long qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        if (q == 2) {
            if (e == 1) continue;  // trivial unit group
            if (e == 2) {
                Component c;
                c.q_pow = 4;
                c.gen = crt_lift(3, 4, f);
                c.gen_ord = 2;
                c.t = 0;
                comps_.push_back(c);
            } else {
                Component c1;  // -1 part
                c1.q_pow = qe;
                c1.gen = crt_lift(qe - 1, qe, f);
                c1.gen_ord = 2;
                c1.t = 0;
                comps_.push_back(c1);
                Component c2;  // 5 part
                c2.q_pow = qe;
                c2.gen = crt_lift(5, qe, f);
                c2.gen_ord = qe / 4;
                c2.t = 0;
                comps_.push_back(c2);
            }
        } else {
            Component c;
            c.q_pow = qe;
            long g = least_primitive_root(q, e);
            c.gen = crt_lift(g, qe, f);
            c.gen_ord = qe / q * (q - 1);
            c.t = 0;
            comps_.push_back(c);
        }
    }
    // dlog tables per component, indexed by residue mod q_pow
    for (auto& c : comps_) {
        c.dlog.assign((size_t)c.q_pow, -1);
        if (c.q_pow % 8 == 0 && c.gen % c.q_pow == c.q_pow - 1) {
            // the {+-1} component of (Z/2^e)^*: sign read off mod 4
            for (long r = 1; r < c.q_pow; r += 2)
                c.dlog[(size_t)r] = (r % 4 == 3) ? 1 : 0;
            continue;
        }
        long x = 1 % c.q_pow;
        long gq = c.gen % c.q_pow;
        for (long k = 0; k < c.gen_ord; ++k) {
            if (c.dlog[(size_t)x] < 0) c.dlog[(size_t)x] = k;
            if (c.q_pow % 8 == 0) {
                // <5> component: cover the -5^k coset with the same exponent
                long y = c.q_pow - x;
                if (c.dlog[(size_t)y] < 0) c.dlog[(size_t)y] = k;
            }
            x = (long)((unsigned __int128)x * (unsigned long)gq % (unsigned long)c.q_pow);
        }
    }
}

void DirichletCharacter::recompute_order() {
    order_ = 1;
    for (const auto& c : comps_) {
        long o = c.gen_ord / gcd_long(c.gen_ord, c.t);
        order_ = lcm_long(order_, o);
    }
}

DirichletCharacter::DirichletCharacter(long modulus) : f_(modulus), order_(1) {
    build_components();
}

std::optional<long> DirichletCharacter::exponent(long a) const {
    a = ((a % f_) + f_) % f_;
    if (f_ == 1) return 0;
    if (gcd_long(a, f_) != 1) return std::nullopt;
    long e = 0;
    for (const auto& c : comps_) {
        long k = c.dlog[(size_t)(a % c.q_pow)];
        if (c.t == 0) continue;
        // chi(gen) = zeta_{o}^{tc} in lowest terms; o divides order_
        long g = gcd_long(c.t, c.gen_ord);
        long o = c.gen_ord / g, tc = c.t / g;
        long kk = (long)(((__int128)tc * k) % o);
        e = (long)((e + (__int128)kk * (order_ / o)) % order_);
    }
    return e;
}

CyclotomicElement DirichletCharacter::value(long a) const {
    auto e = exponent(a);
    if (!e) return CyclotomicElement(order_);  // zero
    return CyclotomicElement::zeta_power(order_, *e);
}

Rat DirichletCharacter::value_rat(long a) const {
    if (order_ > 2) throw MathError("Internal", "character value is irrational");
    auto e = exponent(a);
    if (!e) return 0;
    return *e == 0 ? 1 : -1;
}

bool DirichletCharacter::is_even() const {
    auto e = exponent(-1);
    return e && *e == 0;
}

long DirichletCharacter::conductor() const {
    for (long d = 1; d <= f_; ++d) {
        if (f_ % d != 0) continue;
        bool factors = true;
        for (long a = 1; a <= f_ && factors; ++a) {
            if (gcd_long(a, f_) != 1) continue;
            if ((a - 1) % d == 0) {
                auto e = exponent(a);
                if (!e || *e != 0) factors = false;
            }
        }
        if (factors) return d;
    }
    return f_;
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    long c = conductor();
    if (c == f_) return *this;
    DirichletCharacter r(c);
    for (auto& comp : r.comps_) {
        // evaluate this character on a lift of comp.gen coprime to f_
        long g = comp.gen;
        while (gcd_long(g, f_) != 1) g += c;
        long e = *exponent(g);  // zeta_order^e, an element of mu_{gen_ord}
        comp.t = (long)(((__int128)e * comp.gen_ord / order_) % comp.gen_ord);
    }
    r.recompute_order();
    return r;
}

DirichletCharacter DirichletCharacter::extend(long M) const {
    long L = lcm_long(f_, M);
    if (L == f_) return *this;
    DirichletCharacter r(L);
    for (auto& comp : r.comps_) {
        long g = comp.gen;
        while (gcd_long(g, f_) != 1) g += L;
        long e = *exponent(g);
        comp.t = (long)(((__int128)e * comp.gen_ord / order_) % comp.gen_ord);
    }
    r.recompute_order();
    return r;
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
    long L = lcm_long(f_, o.f_);
    DirichletCharacter a = extend(L), b = o.extend(L);
    DirichletCharacter r(L);
    for (size_t i = 0; i < r.comps_.size(); ++i) {
        auto& comp = r.comps_[i];
        // same canonical generators for identical moduli
        comp.t = (long)(((__int128)a.comps_[i].t + b.comps_[i].t) % comp.gen_ord);
    }
    r.recompute_order();
    return r;
}

DirichletCharacter DirichletCharacter::inverse() const {
    DirichletCharacter r = *this;
    for (auto& comp : r.comps_) comp.t = (comp.gen_ord - comp.t) % comp.gen_ord;
    r.recompute_order();
    return r;
}

DirichletCharacter DirichletCharacter::power(long k) const {
    DirichletCharacter r = *this;
    for (auto& comp : r.comps_) {
        __int128 t = comp.t;
        t = ((t * (k % comp.gen_ord)) % comp.gen_ord + comp.gen_ord) % comp.gen_ord;
        comp.t = (long)t;
    }
    r.recompute_order();
    return r;
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    if (f_ != o.f_) return false;
    long m = lcm_long(order_, o.order_);
    for (long a = 1; a < std::max(2L, f_); ++a) {
        if (f_ > 1 && gcd_long(a, f_) != 1) continue;
        auto e1 = exponent(a);
        auto e2 = o.exponent(a);
        // zeta_{m1}^{e1} = zeta_{m2}^{e2}  iff  e1 m/m1 = e2 m/m2 (mod m)
        long l = (long)(((__int128)(*e1) * (m / order_)) % m);
        long r = (long)(((__int128)(*e2) * (m / o.order_)) % m);
        if (l != r) return false;
    }
    return true;
}

std::vector<DirichletCharacter::GenImage> DirichletCharacter::generator_images() const {
    std::vector<GenImage> v;
    for (const auto& c : comps_) {
        long e = 0;
        if (c.t != 0) {
            long g = gcd_long(c.t, c.gen_ord);
            e = (long)(((__int128)(c.t / g) * (order_ / (c.gen_ord / g))) % order_);
        }
        v.push_back({c.gen, c.gen_ord, e});
    }
    std::sort(v.begin(), v.end(),
              [](const GenImage& a, const GenImage& b) { return a.g < b.g; });
    return v;
}

DirichletCharacter DirichletCharacter::omega(long p) {
    DirichletCharacter r(p);
    // calibrate against the fixed embedding: zeta_{p-1} -> canonical root r0,
    // so that embed(omega(a)) = teichmuller(a) for every unit a
    if (p == 3) {
        // order 2, zeta_2 = -1: omega(2) = -1
        r.comps_[0].t = 1;
        r.recompute_order();
        return r;
    }
    PadicNumber r0 = canonical_root_of_unity(p - 1, p, 1);
    long rbar = r0.unit().get_si() % p;
    long g = r.comps_[0].gen;
    // solve rbar^t = g mod p
    long x = 1, t = -1;
    for (long k = 0; k < p - 1; ++k) {
        if (x == g % p) {
            t = k;
            break;
        }
        x = (long)((unsigned __int128)x * (unsigned long)rbar % (unsigned long)p);
    }
    if (t < 0) throw MathError("Internal", "omega calibration failed");
    r.comps_[0].t = t;
    r.recompute_order();
    if (r.order_ != p - 1) throw MathError("Internal", "omega has wrong order");
    return r;
}

DirichletCharacter DirichletCharacter::kronecker_character(long D) {
    long f = D < 0 ? -D : D;
    DirichletCharacter r(f);
    for (auto& comp : r.comps_) {
        int k = kronecker(Int(D), Int(comp.gen));
        if (k == 0) throw MathError("Internal", "kronecker on non-unit generator");
        comp.t = (k == 1) ? 0 : comp.gen_ord / 2;
        if (k == -1 && comp.gen_ord % 2 != 0)
            throw MathError("Internal", "kronecker sign on odd-order generator");
    }
    r.recompute_order();
    return r;
}

DirichletCharacter DirichletCharacter::from_generator_images(
    long modulus, const std::vector<std::pair<long, long>>& images, long order) {
    // exponent table over the whole group by closure from the given images
    long f = modulus;
    std::vector<long> expo((size_t)f, -1);
    if (f == 1) {
        DirichletCharacter r(1);
        return r;
    }
    expo[1] = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& [g, e] : images) {
            long gg = ((g % f) + f) % f;
            if (gcd_long(gg, f) != 1)
                throw MathError("BadInput", "generator not coprime to modulus");
            for (long a = 0; a < f; ++a) {
                if (expo[(size_t)a] < 0) continue;
                long b = (long)((unsigned __int128)a * (unsigned long)gg % (unsigned long)f);
                long v = (expo[(size_t)a] + e) % order;
                if (expo[(size_t)b] < 0) {
                    expo[(size_t)b] = ((v % order) + order) % order;
                    grew = true;
                }
            }
        }
    }
    for (long a = 1; a < f; ++a)
        if (gcd_long(a, f) == 1 && expo[(size_t)a] < 0)
            throw MathError("BadInput", "images do not generate (Z/f)^*");
    DirichletCharacter r(f);
    for (auto& comp : r.comps_) {
        long e = expo[(size_t)(comp.gen % f)];
        // zeta_order^e must lie in mu_{gen_ord}
        if ((long)(((__int128)e * comp.gen_ord) % order) != 0)
            throw MathError("BadInput", "images violate generator relations");
        comp.t = (long)(((__int128)e * comp.gen_ord / order) % comp.gen_ord);
    }
    r.recompute_order();
    return r;
}

std::string DirichletCharacter::label() const {
    std::ostringstream os;
    os << "chi_mod" << f_ << "(ord" << order_ << ";";
    bool first = true;
    for (const auto& gi : generator_images()) {
        if (!first) os << ",";
        os << gi.g << "->" << gi.chi_exponent;
        first = false;
    }
    os << ")";
    return os.str();
}

CyclotomicElement gauss_sum(const DirichletCharacter& chi) {
    if (!chi.is_primitive()) throw NotPrimitive("gauss_sum needs a primitive character");
    long f = chi.modulus();
    long m = chi.order();
    long L = lcm_long(std::max(f, 1L), m);
    CyclotomicElement tau(L);
    if (f == 1) return CyclotomicElement::from_rational(1, 1);
    for (long a = 1; a < f; ++a) {
        auto e = chi.exponent(a);
        if (!e) continue;
        // chi(a) zeta_f^a = zeta_L^{e L/m + a L/f}
        long k = (long)((((__int128)(*e) * (L / m) + (__int128)a * (L / f)) % L + L) % L);
        tau = tau + CyclotomicElement::zeta_power(L, k);
    }
    return tau;
}

Rat gauss_norm_squared(const DirichletCharacter& chi) {
    if (!chi.is_primitive()) throw NotPrimitive("norm of a non-primitive gauss sum");
    long f = chi.modulus();
    if (f == 1) return 1;
    long m = chi.order();
    long L = lcm_long(f, m);
    if (phi_long(L) <= 128) {
        CyclotomicElement tau = gauss_sum(chi);
        return (tau * tau.conj()).to_rational();
    }
    // tau(chi) conj(tau(chi)) = sum_c chi(c) c_f(c - 1), a sum over (Z/f)^*
    CyclotomicElement s(m);
    for (long c = 1; c < f; ++c) {
        auto e = chi.exponent(c);
        if (!e) continue;
        long r = ramanujan_sum(f, c - 1);
        if (r != 0)
            s = s + CyclotomicElement::zeta_power(m, *e) * Rat(r);
    }
    return s.to_rational();
}

CyclotomicElement gen_bernoulli(unsigned long n, const DirichletCharacter& chi) {
    long f = chi.modulus();
    long m = chi.order();
    CyclotomicElement s(m);
    Rat fpow = rat_pow(Rat(f), (long)n - 1);
    for (long a = 1; a <= f; ++a) {
        auto e = chi.exponent(a);
        if (!e) continue;
        Rat b = bernoulli_polynomial(n, Rat(a, f)) * fpow;
        s = s + CyclotomicElement::zeta_power(m, *e) * b;
    }
    return s;
}

EmbeddedValue embed_padic(const CyclotomicElement& x, long p, long N) {
    long m = x.order();
    if (m % p == 0 && m > 1) throw RamifiedEmbedding("p divides the cyclotomic order");
    long d = (m == 1) ? 1 : mult_order(p % m, m);
    if (d == 1) {
        PadicNumber root = (m == 1) ? PadicNumber::one(p, N)
                                    : canonical_root_of_unity(m, p, N);
        PadicNumber acc = PadicNumber::zero(p, N);
        PadicNumber rp = PadicNumber::one(p, N);
        for (long j = 0; j < x.degree(); ++j) {
            if (x.coeffs()[(size_t)j] != 0)
                acc = acc + rp.scale(x.coeffs()[(size_t)j]);
            rp = rp * root;
        }
        return acc;
    }
    auto K = UnramifiedField::make(p, m, N);
    UnramifiedElement acc = K->zero();
    UnramifiedElement zp = K->one();
    UnramifiedElement z = K->zeta();
    for (long j = 0; j < x.degree(); ++j) {
        if (x.coeffs()[(size_t)j] != 0)
            acc = acc + zp.scale(x.coeffs()[(size_t)j]);
        zp = zp * z;
    }
    return acc;
}

PadicNumber embed_padic_qp(const CyclotomicElement& x, long p, long N) {
    EmbeddedValue v = embed_padic(x, p, N);
    if (std::holds_alternative<PadicNumber>(v)) return std::get<PadicNumber>(v);
    return std::get<UnramifiedElement>(v).as_qp();
}

PadicNumber char_value_qp(const DirichletCharacter& chi, long a, long p, long N) {
    auto e = chi.exponent(a);
    if (!e) return PadicNumber::zero(p, N);
    if ((p - 1) % chi.order() != 0)
        throw RamifiedEmbedding("character order does not divide p-1");
    if (chi.order() == 1) return PadicNumber::one(p, N);
    PadicNumber z = canonical_root_of_unity(chi.order(), p, N);
    return z.pow(*e);
}

}  // namespace padictk
