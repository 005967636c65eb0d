#include "padictk/iwasawa.hpp"

#include <algorithm>
#include <sstream>

namespace padictk {

IwasawaSeries::IwasawaSeries(long p, long N, long M)
    : p_(p), N_(N), M_(M), pN_(pow_ui(p, (unsigned long)N)), c_((size_t)M, Int(0)) {}

IwasawaSeries IwasawaSeries::from_coeffs(long p, long N, long M, std::vector<Int> c) {
    IwasawaSeries f(p, N, M);
    c.resize((size_t)M, Int(0));
    for (auto& x : c) x = mod(x, f.pN_);
    f.c_ = std::move(c);
    return f;
}

IwasawaSeries IwasawaSeries::monomial(long p, long N, long M, long degree, const Int& c) {
    IwasawaSeries f(p, N, M);
    if (degree < M) f.c_[(size_t)degree] = mod(c, f.pN_);
    return f;
}

bool IwasawaSeries::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

IwasawaSeries IwasawaSeries::operator+(const IwasawaSeries& o) const {
    long N = std::min(N_, o.N_), M = std::min(M_, o.M_);
    IwasawaSeries r(p_, N, M);
    for (long i = 0; i < M; ++i)
        r.c_[(size_t)i] = mod(c_[(size_t)i] + o.c_[(size_t)i], r.pN_);
    return r;
}

IwasawaSeries IwasawaSeries::operator-() const {
    IwasawaSeries r = *this;
    for (auto& x : r.c_) x = mod(-x, pN_);
    return r;
}

IwasawaSeries IwasawaSeries::operator-(const IwasawaSeries& o) const {
    return *this + (-o);
}

IwasawaSeries IwasawaSeries::operator*(const IwasawaSeries& o) const {
    long N = std::min(N_, o.N_), M = std::min(M_, o.M_);
    IwasawaSeries r(p_, N, M);
    for (long i = 0; i < M; ++i) {
        if (c_[(size_t)i] == 0) continue;
        for (long j = 0; i + j < M; ++j) {
            if (o.c_[(size_t)j] == 0) continue;
            r.c_[(size_t)(i + j)] =
                mod(r.c_[(size_t)(i + j)] + c_[(size_t)i] * o.c_[(size_t)j], r.pN_);
        }
    }
    return r;
}

IwasawaSeries IwasawaSeries::scale(const Int& c) const {
    IwasawaSeries r = *this;
    for (auto& x : r.c_) x = mod(x * c, pN_);
    return r;
}

bool IwasawaSeries::operator==(const IwasawaSeries& o) const {
    return (*this - o).is_zero();
}

IwasawaSeries IwasawaSeries::inverse_unit() const {
    if (mod(c_[0], p_) == 0)
        throw NotAUnit("series constant term is not a unit");
    IwasawaSeries r(p_, N_, M_);
    Int inv0 = invmod(c_[0], pN_);
    r.c_[0] = inv0;
    for (long k = 1; k < M_; ++k) {
        Int acc = 0;
        for (long j = 1; j <= k; ++j)
            acc = mod(acc + c_[(size_t)j] * r.c_[(size_t)(k - j)], pN_);
        r.c_[(size_t)k] = mod(-inv0 * acc, pN_);
    }
    return r;
}

IwasawaSeries IwasawaSeries::at_precision(long N) const {
    if (N >= N_) return *this;
    return from_coeffs(p_, N, M_, c_);
}

PadicNumber cyclotomic_u(long p, long N) {
    return PadicNumber::from_integer(1 + p, p, N);
}

PadicNumber u_pow_minus_one(const PadicNumber& s, long p, long N) {
    // u^s - 1 = sum_{k>=1} C(s,k) p^k; v(C(s,k) p^k) >= k - v(k!)
    if (s.is_zero()) return PadicNumber::zero(p, std::min(N, s.abs_prec() + 1));
    long K = N;
    while (K - (K - 1) / (p - 1) < N + 1) ++K;
    PadicNumber acc = PadicNumber::zero(p, N + 1);
    PadicNumber binom = PadicNumber::one(p, N + K);  // C(s,k), updated in place
    PadicNumber pk = PadicNumber::one(p, N + K);
    PadicNumber S = s;
    for (long k = 1; k <= K; ++k) {
        // C(s,k) = C(s,k-1) * (s - k + 1) / k
        binom = binom * (S - PadicNumber::from_integer(k - 1, p, N + K));
        binom = binom.scale(Rat(1, k));
        pk = pk.scale(Rat(p));
        acc = acc + (binom * pk).truncated(N);
    }
    return acc.truncated(N);
}

PadicNumber IwasawaSeries::evaluate_at(const PadicNumber& t) const {
    if (!t.is_zero() && t.val() < 1)
        throw PrecisionExhausted("evaluation point must have positive valuation");
    long prec = std::min(N_, M_);  // T-truncation error has valuation >= M
    if (prec < 1) throw PrecisionExhausted("no guaranteed digits at evaluation");
    PadicNumber acc = PadicNumber::zero(p_, prec);
    for (long i = M_ - 1; i >= 0; --i) {
        acc = acc * t;
        acc = (acc + PadicNumber::from_integer(c_[(size_t)i], p_, prec)).truncated(prec);
    }
    return acc;
}

PadicNumber IwasawaSeries::evaluate(const PadicNumber& s) const {
    return evaluate_at(u_pow_minus_one(s, p_, std::min(N_, M_)));
}

PadicNumber IwasawaSeries::evaluate_int(long s) const {
    long prec = std::min(N_, M_);
    Int pw = pow_ui(p_, (unsigned long)prec);
    Int u = 1 + p_;
    Int t;
    if (s >= 0)
        t = mod(powmod(u, Int(s), pw) - 1, pw);
    else
        t = mod(invmod(powmod(u, Int(-s), pw), pw) - 1, pw);
    PadicNumber tp = t == 0 ? PadicNumber::zero(p_, prec)
                            : PadicNumber::from_integer(t, p_, prec).truncated(prec);
    return evaluate_at(tp);
}

IwasawaSeries IwasawaSeries::twist() const { return substitute(+1, +1); }

IwasawaSeries IwasawaSeries::involution() const { return substitute(0, -1); }

// F(u^eps (1+T)^delta - 1); u_exp in {-1, 0, +1}, t_exp in {-1, +1}
IwasawaSeries IwasawaSeries::substitute(int u_exp, int t_exp) const {
    IwasawaSeries r(p_, N_, M_);
    // accumulate c_j * (u^eps (1+T)^delta - 1)^j via the binomial theorem:
    // (A(1+T)^d - 1)^j = sum_i C(j,i) A^i (1+T)^{di} (-1)^{j-i}
    // coefficient of T^k in (1+T)^{n}: C(n,k) (negative n via binom_rat)
    Int u = 1 + p_;
    Int A = 1;
    if (u_exp == 1) A = mod(u, pN_);
    if (u_exp == -1) A = invmod(u, pN_);
    // precompute powers A^i
    std::vector<Int> Apow((size_t)M_ + 1, Int(1));
    for (long i = 1; i <= M_; ++i) Apow[(size_t)i] = mod(Apow[(size_t)(i - 1)] * A, pN_);
    for (long j = 0; j < M_; ++j) {
        if (c_[(size_t)j] == 0) continue;
        // binomial expansion over i; sign (-1)^(j-i)
        for (long i = 0; i <= j; ++i) {
            Int cji = binom_int(j, (unsigned long)i);
            Int base = mod(c_[(size_t)j] * cji * Apow[(size_t)i], pN_);
            if ((j - i) % 2 == 1) base = mod(-base, pN_);
            if (base == 0) continue;
            long n = t_exp * i;
            // add base * (1+T)^n
            for (long k = 0; k < M_; ++k) {
                Rat b = binom_rat(Rat(n), (unsigned long)k);
                if (b == 0) break;  // only happens for n >= 0, k > n
                Int num = b.get_num();  // denominator 1 for integer n
                r.c_[(size_t)k] = mod(r.c_[(size_t)k] + base * num, pN_);
                if (n >= 0 && k >= n) break;
            }
        }
    }
    return r;
}

IwasawaSeries::MuLambda IwasawaSeries::mu_lambda() const {
    long mu = N_;
    long lambda = -1;
    for (long i = 0; i < M_; ++i) {
        if (c_[(size_t)i] == 0) continue;
        long v = valuation(c_[(size_t)i], Int(p_));
        if (v < mu) {
            mu = v;
            lambda = i;
        }
    }
    if (lambda < 0) {
        // zero at this precision
        throw ZeroAtPrecision("mu/lambda of the zero series");
    }
    return {mu, lambda, true, mu >= N_};
}

std::string IwasawaSeries::str(long max_terms) const {
    std::ostringstream os;
    bool first = true;
    long shown = 0;
    for (long i = 0; i < M_ && shown < max_terms; ++i) {
        if (c_[(size_t)i] == 0) continue;
        if (!first) os << " + ";
        os << c_[(size_t)i];
        if (i > 0) os << "*T^" << i;
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << "  (mod " << p_ << "^" << N_ << ", T^" << M_ << ")";
    return os.str();
}

}  // namespace padictk
