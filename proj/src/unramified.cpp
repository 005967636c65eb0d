#include "padictk/unramified.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "padictk/cyclotomic.hpp"

namespace padictk {

namespace {

// --- dense polynomials over F_p (p < 2^31), coefficient vectors ---

using FpPoly = std::vector<long>;

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long fp_mul(long a, long b, long p) {
    return (long)((unsigned __int128)a * (unsigned long)b % (unsigned long)p);
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + fp_mul(a[i], b[j], p)) % p;
    }
    return r;
}

// remainder of a by monic-normalizable b
FpPoly poly_rem(FpPoly a, const FpPoly& b, long p) {
    trim(a);
    long db = (long)b.size() - 1;
    long inv_lead = powmod_long(b[(size_t)db], p - 2, p);
    while ((long)a.size() - 1 >= db) {
        long da = (long)a.size() - 1;
        long c = fp_mul(a[(size_t)da], inv_lead, p);
        if (c != 0)
            for (long j = 0; j <= db; ++j) {
                long& t = a[(size_t)(da - db + j)];
                t = ((t - fp_mul(c, b[(size_t)j], p)) % p + p) % p;
            }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, long p) {
    return poly_rem(poly_mul(a, b, p), m, p);
}

FpPoly poly_powmod(FpPoly base, Int e, const FpPoly& m, long p) {
    FpPoly r = {1};
    base = poly_rem(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = powmod_long(a.back(), p - 2, p);
        for (auto& c : a) c = fp_mul(c, inv, p);
    }
    return a;
}

// extended gcd: returns g and u, v with u*a + v*b = g (g monic)
FpPoly poly_ext_gcd(FpPoly a, FpPoly b, long p, FpPoly& u, FpPoly& v) {
    trim(a);
    trim(b);
    FpPoly u0 = {1}, v0 = {}, u1 = {}, v1 = {1};
    while (!b.empty()) {
        // quotient of a by b
        FpPoly q;
        {
            FpPoly r = a;
            long db = (long)b.size() - 1;
            long inv_lead = powmod_long(b[(size_t)db], p - 2, p);
            q.assign(std::max<size_t>(1, r.size() > b.size() ? r.size() - b.size() + 1 : 1), 0);
            trim(r);
            while ((long)r.size() - 1 >= db && !r.empty()) {
                long da = (long)r.size() - 1;
                long c = fp_mul(r[(size_t)da], inv_lead, p);
                q[(size_t)(da - db)] = c;
                for (long j = 0; j <= db; ++j) {
                    long& t = r[(size_t)(da - db + j)];
                    t = ((t - fp_mul(c, b[(size_t)j], p)) % p + p) % p;
                }
                r.pop_back();
                trim(r);
            }
            a = std::move(r);
        }
        std::swap(a, b);
        // (u0,v0; u1,v1) update: new u1 = u0 - q*u1
        FpPoly qu = poly_mul(q, u1, p), qv = poly_mul(q, v1, p);
        FpPoly nu = u0, nv = v0;
        nu.resize(std::max(nu.size(), qu.size()), 0);
        for (size_t i = 0; i < qu.size(); ++i) nu[i] = ((nu[i] - qu[i]) % p + p) % p;
        nv.resize(std::max(nv.size(), qv.size()), 0);
        for (size_t i = 0; i < qv.size(); ++i) nv[i] = ((nv[i] - qv[i]) % p + p) % p;
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
        trim(u1);
        trim(v1);
    }
    long inv = powmod_long(a.back(), p - 2, p);
    for (auto& c : a) c = fp_mul(c, inv, p);
    for (auto& c : u0) c = fp_mul(c, inv, p);
    for (auto& c : v0) c = fp_mul(c, inv, p);
    u = std::move(u0);
    v = std::move(v0);
    return a;
}

// all monic irreducible factors of the squarefree poly f mod p, each of degree d
void equal_degree_split(const FpPoly& f, long d, long p, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
    long deg = (long)f.size() - 1;
    if (deg == d) {
        out.push_back(f);
        return;
    }
    Int e = (pow_ui(p, (unsigned long)d) - 1) / 2;
    for (;;) {
        FpPoly a((size_t)deg, 0);
        for (auto& c : a) c = (long)(rng() % (unsigned long)p);
        trim(a);
        if (a.empty()) continue;
        FpPoly b = poly_powmod(a, e, f, p);
        if (b.empty()) continue;
        b[0] = ((b[0] - 1) % p + p) % p;
        trim(b);
        if (b.empty()) continue;
        FpPoly g = poly_gcd(f, b, p);
        long dg = (long)g.size() - 1;
        if (dg <= 0 || dg >= deg) continue;
        // f / g
        FpPoly h;
        {
            FpPoly r = f;
            long db = dg;
            h.assign(r.size() - g.size() + 1, 0);
            while ((long)r.size() - 1 >= db && !r.empty()) {
                long da = (long)r.size() - 1;
                long c = r[(size_t)da];  // g monic
                if (da - db >= 0) h[(size_t)(da - db)] = c;
                for (long j = 0; j <= db; ++j) {
                    long& t = r[(size_t)(da - db + j)];
                    t = ((t - fp_mul(c, g[(size_t)j], p)) % p + p) % p;
                }
                r.pop_back();
                trim(r);
            }
        }
        equal_degree_split(g, d, p, rng, out);
        equal_degree_split(h, d, p, rng, out);
        return;
    }
}

std::vector<Int> lift_coeffs(const FpPoly& f) {
    std::vector<Int> r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

// integer polynomial arithmetic mod M
std::vector<Int> zpoly_mul(const std::vector<Int>& a, const std::vector<Int>& b,
                           const Int& M) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], M);
    }
    return r;
}

void zpoly_trim(std::vector<Int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder by a monic polynomial, coefficients mod M
std::vector<Int> zpoly_rem_monic(std::vector<Int> a, const std::vector<Int>& b,
                                 const Int& M) {
    zpoly_trim(a);
    long db = (long)b.size() - 1;
    while ((long)a.size() - 1 >= db && !a.empty()) {
        long da = (long)a.size() - 1;
        Int c = a[(size_t)da];
        if (c != 0)
            for (long j = 0; j <= db; ++j)
                a[(size_t)(da - db + j)] = mod(a[(size_t)(da - db + j)] - c * b[(size_t)j], M);
        a.pop_back();
        zpoly_trim(a);
    }
    return a;
}

}  // namespace

UnramifiedField::UnramifiedField(long p, long m, long N) : p_(p), m_(m), N_(N) {
    if (m % p == 0) throw RamifiedEmbedding("p divides the root-of-unity order");
    d_ = mult_order(p % m, m);
    pN_ = pow_ui(p, (unsigned long)N);

    // factor Phi_m mod p into the equal-degree-d irreducible factors
    const std::vector<Int>& phiZ = cyclotomic_polynomial(m);
    FpPoly phi(phiZ.size());
    for (size_t i = 0; i < phiZ.size(); ++i)
        phi[i] = (long)mpz_fdiv_ui(phiZ[i].get_mpz_t(), (unsigned long)p);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ ((unsigned long)m << 20) ^ (unsigned long)p);
    std::vector<FpPoly> factors;
    equal_degree_split(phi, d_, p, rng, factors);

    // canonical choice: least ((-1)^d F(0), F_1, ..., F_{d-1})
    auto key = [&](const FpPoly& f) {
        std::vector<long> k;
        long norm = (d_ % 2 == 0) ? f[0] : (p - f[0]) % p;
        k.push_back(norm);
        for (long i = 1; i < d_; ++i) k.push_back(f[(size_t)i]);
        return k;
    };
    std::sort(factors.begin(), factors.end(),
              [&](const FpPoly& a, const FpPoly& b) { return key(a) < key(b); });
    FpPoly fbar = factors.front();

    if ((long)factors.size() == 1) {
        // Phi_m is already irreducible mod p; no lifting needed
        F_.resize(phiZ.size());
        for (size_t i = 0; i < phiZ.size(); ++i) F_[i] = mod(phiZ[i], pN_);
        return;
    }

    // cofactor and Bezout data mod p
    FpPoly gbar;
    {
        FpPoly r = phi;
        long db = (long)fbar.size() - 1;
        gbar.assign(r.size() - fbar.size() + 1, 0);
        while ((long)r.size() - 1 >= db && !r.empty()) {
            long da = (long)r.size() - 1;
            long c = r[(size_t)da];
            gbar[(size_t)(da - db)] = c;
            for (long j = 0; j <= db; ++j) {
                long& t = r[(size_t)(da - db + j)];
                t = ((t - fp_mul(c, fbar[(size_t)j], p)) % p + p) % p;
            }
            r.pop_back();
            trim(r);
        }
    }
    FpPoly A, B;  // A*fbar + B*gbar = 1
    poly_ext_gcd(fbar, gbar, p, A, B);

    // linear Hensel lift: F*G = Phi_m mod p^k, k = 1..N
    std::vector<Int> F = lift_coeffs(fbar), G = lift_coeffs(gbar);
    for (long k = 1; k < N; ++k) {
        Int pk = pow_ui(p, (unsigned long)k);
        Int pk1 = pk * p;
        // E = (Phi - F G)/p^k mod p
        std::vector<Int> FG = zpoly_mul(F, G, pk1);
        FpPoly E(phiZ.size(), 0);
        for (size_t i = 0; i < phiZ.size(); ++i) {
            Int diff = mod(Int(phiZ[i]) - (i < FG.size() ? FG[i] : Int(0)), pk1);
            E[i] = (long)mpz_fdiv_ui(Int(diff / pk).get_mpz_t(), (unsigned long)p);
        }
        trim(E);
        if (E.empty()) continue;
        FpPoly dF = poly_rem(poly_mul(B, E, p), fbar, p);
        FpPoly dG = poly_rem(poly_mul(A, E, p), gbar, p);
        F.resize(fbar.size(), Int(0));
        G.resize(gbar.size(), Int(0));
        for (size_t i = 0; i < dF.size(); ++i) F[i] = mod(F[i] + pk * dF[i], pk1);
        for (size_t i = 0; i < dG.size(); ++i) G[i] = mod(G[i] + pk * dG[i], pk1);
    }
    F.resize(fbar.size(), Int(0));
    for (auto& c : F) c = mod(c, pN_);
    F_ = std::move(F);
}

std::shared_ptr<const UnramifiedField> UnramifiedField::make(long p, long m, long N) {
    return std::shared_ptr<const UnramifiedField>(new UnramifiedField(p, m, N));
}

UnramifiedElement UnramifiedField::from_coeffs(std::vector<Int> c, long val) const {
    c.resize((size_t)d_, Int(0));
    for (auto& x : c) x = mod(x, pN_);
    UnramifiedElement e;
    e.K_ = shared_from_this();
    e.val_ = val;
    e.c_ = std::move(c);
    return e;
}

UnramifiedElement UnramifiedField::zero() const { return from_coeffs({}); }

UnramifiedElement UnramifiedField::one() const { return from_coeffs({Int(1)}); }

UnramifiedElement UnramifiedField::zeta() const {
    if (d_ == 1) return from_coeffs({mod(-F_[0], pN_)});
    return from_coeffs({Int(0), Int(1)});
}

PadicNumber UnramifiedField::root_qp() const {
    if (d_ != 1) throw MathError("Internal", "root_qp needs degree 1");
    return PadicNumber::from_unit(mod(-F_[0], pN_), 0, p_, N_);
}

PadicNumber canonical_root_of_unity(long m, long p, long N) {
    return UnramifiedField::make(p, m, N)->root_qp();
}

void UnramifiedElement::normalize() {
    bool all_zero = true;
    for (const auto& c : c_)
        if (c != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) val_ = 0;
}

bool UnramifiedElement::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

UnramifiedElement UnramifiedElement::operator+(const UnramifiedElement& o) const {
    long p = K_->p();
    long v = std::min(val_, o.val_);
    // aligning valuations costs the shifted summand top digits; keep N fixed
    std::vector<Int> c((size_t)K_->degree());
    Int s1 = pow_ui(p, (unsigned long)(val_ - v));
    Int s2 = pow_ui(p, (unsigned long)(o.val_ - v));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = mod(c_[i] * s1 + o.c_[i] * s2, K_->pN());
    auto r = K_->from_coeffs(std::move(c), v);
    r.normalize();
    return r;
}

UnramifiedElement UnramifiedElement::operator-() const {
    std::vector<Int> c = c_;
    for (auto& x : c) x = mod(-x, K_->pN());
    return K_->from_coeffs(std::move(c), val_);
}

UnramifiedElement UnramifiedElement::operator-(const UnramifiedElement& o) const {
    return *this + (-o);
}

UnramifiedElement UnramifiedElement::operator*(const UnramifiedElement& o) const {
    std::vector<Int> prod = zpoly_mul(c_, o.c_, K_->pN());
    prod = zpoly_rem_monic(std::move(prod), K_->modulus_poly(), K_->pN());
    return K_->from_coeffs(std::move(prod), val_ + o.val_);
}

UnramifiedElement UnramifiedElement::inverse() const {
    if (is_zero()) throw NotAUnit("inverse of zero");
    long p = K_->p();
    // reduce mod p and invert with the extended gcd, then Hensel-lift
    FpPoly a(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        a[i] = (long)mpz_fdiv_ui(c_[i].get_mpz_t(), (unsigned long)p);
    trim(a);
    if (a.empty()) throw NotAUnit("inverse of a non-unit (all coeffs divisible by p)");
    FpPoly fbar(K_->modulus_poly().size());
    for (size_t i = 0; i < fbar.size(); ++i)
        fbar[i] = (long)mpz_fdiv_ui(K_->modulus_poly()[i].get_mpz_t(), (unsigned long)p);
    FpPoly u, v;
    FpPoly g = poly_ext_gcd(a, fbar, p, u, v);
    if ((long)g.size() - 1 != 0) throw NotAUnit("element not invertible");
    long ginv = powmod_long(g[0], p - 2, p);  // g constant
    for (auto& c : u) c = fp_mul(c, ginv, p);
    std::vector<Int> x = lift_coeffs(u);
    x.resize((size_t)K_->degree(), Int(0));
    long prec = 1;
    while (prec < K_->N()) {
        prec = std::min(2 * prec, K_->N());
        Int M = pow_ui(p, (unsigned long)prec);
        // x <- x(2 - a x) mod (M, F)
        std::vector<Int> ax = zpoly_rem_monic(zpoly_mul(c_, x, M), K_->modulus_poly(), M);
        for (auto& c : ax) c = mod(-c, M);
        ax.resize(std::max<size_t>(ax.size(), 1), Int(0));
        ax[0] = mod(ax[0] + 2, M);
        x = zpoly_rem_monic(zpoly_mul(x, ax, M), K_->modulus_poly(), M);
        x.resize((size_t)K_->degree(), Int(0));
    }
    return K_->from_coeffs(std::move(x), -val_);
}

UnramifiedElement UnramifiedElement::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    UnramifiedElement r = K_->one();
    UnramifiedElement b = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool UnramifiedElement::operator==(const UnramifiedElement& o) const {
    return (*this - o).is_zero();
}

UnramifiedElement UnramifiedElement::scale(const Rat& r) const {
    if (r == 0) return K_->zero();
    long p = K_->p();
    long v = valuation(r, Int(p));
    Rat u = r / rat_pow(Rat(p), v);
    Int num = mod(u.get_num(), K_->pN());
    Int den = invmod(mod(u.get_den(), K_->pN()), K_->pN());
    std::vector<Int> c = c_;
    for (auto& x : c) x = mod(x * num * den, K_->pN());
    return K_->from_coeffs(std::move(c), val_ + v);
}

PadicNumber UnramifiedElement::as_qp() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            throw MathError("NotRational", "element is not in Z_p");
    if (is_zero()) return PadicNumber::zero(K_->p(), K_->N() + val_);
    Int u = c_[0];
    long v = valuation(u, Int(K_->p()));
    if (v >= K_->N()) return PadicNumber::zero(K_->p(), K_->N() + val_);
    return PadicNumber::from_unit(u / pow_ui(K_->p(), (unsigned long)v), val_ + v,
                                  K_->p(), K_->N() - v);
}

std::string UnramifiedElement::str() const {
    std::ostringstream os;
    if (val_ != 0) os << K_->p() << "^" << val_ << " * ";
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

}  // namespace padictk
