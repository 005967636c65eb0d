#include "padictk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace padictk {

namespace {

// exact division of integer polynomials, num = den * q
std::vector<Int> poly_divide_exact(const std::vector<Int>& num,
                                   const std::vector<Int>& den) {
    std::vector<Int> r = num;
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    long dd = (long)den.size() - 1;
    for (long i = (long)r.size() - 1; i >= dd; --i) {
        if (r[(size_t)i] == 0) continue;
        Int c = r[(size_t)i] / den[(size_t)dd];
        q[(size_t)(i - dd)] = c;
        for (long j = 0; j <= dd; ++j) r[(size_t)(i - dd + j)] -= c * den[(size_t)j];
    }
    return q;
}

// x^k mod Phi_m, cached per m, for k in [0, m)
std::recursive_mutex& cyclo_mutex() {
    static std::recursive_mutex mu;
    return mu;
}

const std::vector<std::vector<Rat>>& power_table(long m) {
    static std::map<long, std::vector<std::vector<Rat>>> cache;
    std::lock_guard<std::recursive_mutex> lock(cyclo_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    const std::vector<Int>& phi = cyclotomic_polynomial(m);
    long d = (long)phi.size() - 1;
    std::vector<std::vector<Rat>> tab((size_t)m, std::vector<Rat>((size_t)d, Rat(0)));
    for (long k = 0; k < m; ++k) {
        if (k < d) {
            tab[(size_t)k][(size_t)k] = 1;
        } else {
            // x^k = x * x^(k-1) reduced by the monic phi
            std::vector<Rat> v((size_t)(d + 1), Rat(0));
            for (long j = 0; j < d; ++j) v[(size_t)(j + 1)] = tab[(size_t)(k - 1)][(size_t)j];
            Rat lead = v[(size_t)d];
            if (lead != 0)
                for (long j = 0; j < d; ++j)
                    v[(size_t)j] -= lead * Rat(phi[(size_t)j]);
            v.resize((size_t)d);
            tab[(size_t)k] = v;
        }
    }
    return cache.emplace(m, std::move(tab)).first->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<Int>> cache;
    std::lock_guard<std::recursive_mutex> lock(cyclo_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Int> num((size_t)m + 1, Int(0));
    num[0] = -1;
    num[(size_t)m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial(d));
    return cache.emplace(m, std::move(num)).first->second;
}

CyclotomicElement::CyclotomicElement(long m)
    : m_(m), c_((size_t)phi_long(m), Rat(0)) {}

CyclotomicElement CyclotomicElement::from_rational(const Rat& r, long m) {
    CyclotomicElement x(m);
    x.c_[0] = r;
    return x;
}

void CyclotomicElement::add_zeta_power(long e, const Rat& coef) {
    e = ((e % m_) + m_) % m_;
    const auto& tab = power_table(m_)[(size_t)e];
    for (size_t j = 0; j < c_.size(); ++j) c_[j] += coef * tab[j];
}

CyclotomicElement CyclotomicElement::zeta_power(long m, long e) {
    CyclotomicElement x(m);
    x.add_zeta_power(e, Rat(1));
    return x;
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Rat CyclotomicElement::to_rational() const {
    if (!is_rational())
        throw MathError("NotRational", "cyclotomic element is irrational");
    return c_[0];
}

CyclotomicElement promote_pair(const CyclotomicElement& a,
                               const CyclotomicElement& b,
                               CyclotomicElement& b_out) {
    long M = lcm_long(a.m_, b.m_);
    b_out = b.promote(M);
    return a.promote(M);
}

CyclotomicElement CyclotomicElement::promote(long M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw MathError("Internal", "promote to non-multiple order");
    CyclotomicElement r(M);
    long s = M / m_;
    for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) r.add_zeta_power((long)j * s, c_[j]);
    return r;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
    if (m_ != o.m_) {
        CyclotomicElement b(1);
        CyclotomicElement a = promote_pair(*this, o, b);
        return a + b;
    }
    CyclotomicElement r = *this;
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] += o.c_[j];
    return r;
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
    return *this + (-o);
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
    if (m_ != o.m_) {
        CyclotomicElement b(1);
        CyclotomicElement a = promote_pair(*this, o, b);
        return a * b;
    }
    CyclotomicElement r(m_);
    // convolution, then fold the overflow powers through the table
    size_t d = c_.size();
    std::vector<Rat> conv(2 * d, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    for (size_t k = 0; k < conv.size(); ++k)
        if (conv[k] != 0) r.add_zeta_power((long)k, conv[k]);
    return r;
}

CyclotomicElement CyclotomicElement::operator*(const Rat& s) const {
    CyclotomicElement r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
    return (*this - o).is_zero();
}

CyclotomicElement CyclotomicElement::galois(long t) const {
    t = ((t % m_) + m_) % m_;
    if (gcd_long(t, m_) != 1)
        throw MathError("Internal", "galois exponent not coprime to order");
    CyclotomicElement r(m_);
    for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) r.add_zeta_power((long)j * t, c_[j]);
    return r;
}

std::string CyclotomicElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        os << c_[j];
        if (j > 0) os << "*z" << m_ << "^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace padictk
