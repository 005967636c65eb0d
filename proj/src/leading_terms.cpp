#include "padictk/leading_terms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "padictk/util.hpp"

namespace padictk {

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

ChainRing::ChainRing(long p, int a, int b) : p_(p), a_(a), b_(b) {
    if (p < 2 || a < 1 || b < 1) throw MathError("BadInput", "bad chain ring");
    pa_ = upow((std::uint64_t)p, a);
    size_ = upow(pa_, b);
}

std::string ChainRing::str() const {
    std::ostringstream os;
    os << "Z/" << pa_;
    if (b_ > 1) os << "[x]/(x^" << b_ << ")";
    return os.str();
}

RingElem::RingElem(std::shared_ptr<const ChainRing> R, std::vector<std::uint64_t> c)
    : R_(std::move(R)), c_(std::move(c)) {
    c_.resize((size_t)R_->b(), 0);
    for (auto& x : c_) x %= R_->pa();
}

RingElem RingElem::zero(std::shared_ptr<const ChainRing> R) {
    return RingElem(std::move(R), {});
}

RingElem RingElem::one(std::shared_ptr<const ChainRing> R) {
    return RingElem(std::move(R), {1});
}

RingElem RingElem::from_index(std::shared_ptr<const ChainRing> R,
                              std::uint64_t index) {
    std::vector<std::uint64_t> c((size_t)R->b());
    for (int i = 0; i < R->b(); ++i) {
        c[(size_t)i] = index % R->pa();
        index /= R->pa();
    }
    return RingElem(std::move(R), std::move(c));
}

std::uint64_t RingElem::index() const {
    std::uint64_t idx = 0;
    for (int i = R_->b() - 1; i >= 0; --i) idx = idx * R_->pa() + c_[(size_t)i];
    return idx;
}

bool RingElem::is_zero() const {
    for (auto x : c_)
        if (x) return false;
    return true;
}

bool RingElem::is_unit() const { return c_[0] % (std::uint64_t)R_->p() != 0; }

RingElem RingElem::operator+(const RingElem& o) const {
    std::vector<std::uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + o.c_[i]) % R_->pa();
    return RingElem(R_, std::move(c));
}

RingElem RingElem::operator-() const {
    std::vector<std::uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = (R_->pa() - c_[i]) % R_->pa();
    return RingElem(R_, std::move(c));
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    std::vector<std::uint64_t> c(c_.size(), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; i + j < c_.size(); ++j) {
            if (!o.c_[j]) continue;
            c[i + j] = (c[i + j] + c_[i] * o.c_[j]) % R_->pa();
        }
    }
    return RingElem(R_, std::move(c));
}

std::string RingElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!first) os << "+";
        os << c_[i];
        if (i >= 1) os << "x";
        if (i > 1) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<RingElem> enumerate_ring(const std::shared_ptr<const ChainRing>& R) {
    std::vector<RingElem> out;
    out.reserve(R->size());
    for (std::uint64_t i = 0; i < R->size(); ++i)
        out.push_back(RingElem::from_index(R, i));
    return out;
}

FreeMap::FreeMap(std::shared_ptr<const ChainRing> R, long rows, long cols)
    : R_(std::move(R)), n_(rows), m_(cols),
      e_((size_t)(rows * cols), RingElem::zero(R_)) {}

FreeMap FreeMap::from_entries(std::shared_ptr<const ChainRing> R, long rows,
                              long cols, std::vector<RingElem> row_major) {
    FreeMap f(std::move(R), rows, cols);
    if ((long)row_major.size() != rows * cols)
        throw MathError("BadInput", "matrix entry count mismatch");
    f.e_ = std::move(row_major);
    return f;
}

std::vector<RingElem> FreeMap::apply(const std::vector<RingElem>& v) const {
    if ((long)v.size() != m_) throw MathError("BadInput", "vector length");
    std::vector<RingElem> out((size_t)n_, RingElem::zero(R_));
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < m_; ++j)
            out[(size_t)i] = out[(size_t)i] + at(i, j) * v[(size_t)j];
    return out;
}

FreeMap FreeMap::transpose() const {
    FreeMap t(R_, m_, n_);
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < m_; ++j) t.at(j, i) = at(i, j);
    return t;
}

FreeMap FreeMap::compose(const FreeMap& inner) const {
    if (inner.n_ != m_) throw MathError("BadInput", "composition shape");
    FreeMap out(R_, n_, inner.m_);
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < inner.m_; ++j) {
            RingElem acc = RingElem::zero(R_);
            for (long k = 0; k < m_; ++k) acc = acc + at(i, k) * inner.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

std::vector<RingElem> FreeMap::row(long i) const {
    std::vector<RingElem> r((size_t)m_, RingElem::zero(R_));
    for (long j = 0; j < m_; ++j) r[(size_t)j] = at(i, j);
    return r;
}

// ------------------------------------------------------------------ kernels

namespace {

// submodule span of a set of vectors in S^m, as a sorted list of index tuples
std::vector<std::vector<std::uint64_t>> span_indices(
    const std::shared_ptr<const ChainRing>& R,
    const std::vector<std::vector<RingElem>>& gens, long m) {
    std::vector<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<RingElem>> frontier;
    auto key = [m](const std::vector<RingElem>& v) {
        std::vector<std::uint64_t> k((size_t)m);
        for (long j = 0; j < m; ++j) k[(size_t)j] = v[(size_t)j].index();
        return k;
    };
    std::vector<RingElem> zero((size_t)m, RingElem::zero(R));
    seen.push_back(key(zero));
    frontier.push_back(zero);
    auto ring = enumerate_ring(R);
    // closure under adding s * g for each generator
    bool grew = true;
    std::vector<std::vector<RingElem>> elems = {zero};
    while (grew) {
        grew = false;
        std::vector<std::vector<RingElem>> next;
        for (const auto& e : elems) {
            for (const auto& g : gens) {
                for (const auto& s : ring) {
                    std::vector<RingElem> v((size_t)m, RingElem::zero(R));
                    for (long j = 0; j < m; ++j)
                        v[(size_t)j] = e[(size_t)j] + s * g[(size_t)j];
                    auto k = key(v);
                    auto it = std::lower_bound(seen.begin(), seen.end(), k);
                    if (it == seen.end() || *it != k) {
                        seen.insert(it, k);
                        next.push_back(v);
                        grew = true;
                    }
                }
            }
        }
        for (auto& v : next) elems.push_back(std::move(v));
    }
    return seen;
}

}  // namespace

std::vector<std::vector<RingElem>> kernel_enumeration(const FreeMap& f) {
    const auto& R = f.ring();
    long m = f.cols();
    double total = 1;
    for (long j = 0; j < m; ++j) total *= (double)R->size();
    if (total > (double)kEnumerationBudget)
        throw BudgetExceeded("kernel enumeration beyond the element budget");
    std::uint64_t count = (std::uint64_t)total;
    std::vector<std::vector<RingElem>> gens;
    std::vector<std::vector<std::uint64_t>> span;  // sorted keys of current span
    {
        std::vector<RingElem> zero((size_t)m, RingElem::zero(R));
        std::vector<std::uint64_t> k((size_t)m, 0);
        span.push_back(k);
    }
    auto key_of = [m](const std::vector<RingElem>& v) {
        std::vector<std::uint64_t> k((size_t)m);
        for (long j = 0; j < m; ++j) k[(size_t)j] = v[(size_t)j].index();
        return k;
    };
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        // decode idx into a vector of ring elements
        std::vector<RingElem> v((size_t)m, RingElem::zero(R));
        std::uint64_t t = idx;
        for (long j = 0; j < m; ++j) {
            v[(size_t)j] = RingElem::from_index(R, t % R->size());
            t /= R->size();
        }
        bool in_kernel = true;
        auto img = f.apply(v);
        for (const auto& x : img)
            if (!x.is_zero()) {
                in_kernel = false;
                break;
            }
        if (!in_kernel) continue;
        auto k = key_of(v);
        if (std::binary_search(span.begin(), span.end(), k)) continue;
        gens.push_back(v);
        span = span_indices(R, gens, m);
    }
    return gens;
}

std::vector<std::vector<RingElem>> kernel_howell(const FreeMap& f) {
    const auto& R = f.ring();
    if (R->b() != 1)
        throw MathError("BadInput", "Howell path needs b = 1");
    std::uint64_t N = R->pa();
    long n = f.rows(), m = f.cols();
    // rows of [A^T | I_m]; combinations give (A v, v)
    long width = n + m;
    std::vector<std::vector<std::uint64_t>> rows;
    for (long i = 0; i < m; ++i) {
        std::vector<std::uint64_t> r((size_t)width, 0);
        for (long j = 0; j < n; ++j) r[(size_t)j] = f.at(j, i).coeffs()[0];
        r[(size_t)(n + i)] = 1;
        rows.push_back(std::move(r));
    }
    // Howell normal form over Z/N
    auto vmod = [&](std::uint64_t x) { return x % N; };
    auto vp_of = [&](std::uint64_t x) {
        if (x == 0) return (int)64;
        int v = 0;
        while (x % (std::uint64_t)R->p() == 0) {
            x /= (std::uint64_t)R->p();
            ++v;
        }
        return v;
    };
    std::vector<std::vector<std::uint64_t>> H;
    long col = 0, rix = 0;
    (void)rix;
    std::vector<std::vector<std::uint64_t>> work = rows;
    std::vector<std::vector<std::uint64_t>> extra;
    for (col = 0; col < width; ++col) {
        // pick the row with minimal valuation in this column
        int best = -1, bestv = 65;
        for (size_t i = 0; i < work.size(); ++i) {
            int v = vp_of(work[i][(size_t)col]);
            if (v < bestv) {
                bestv = v;
                best = (int)i;
            }
        }
        if (best < 0 || bestv >= R->a()) continue;
        auto pivot_row = work[(size_t)best];
        work.erase(work.begin() + best);
        // normalize: make pivot p^v by multiplying with the unit inverse
        std::uint64_t piv = pivot_row[(size_t)col];
        std::uint64_t unit = piv / upow((std::uint64_t)R->p(), bestv);
        // invert unit mod N
        std::uint64_t uinv = 1;
        for (std::uint64_t t = 1; t < N; ++t)
            if (t * unit % N == 1) {
                uinv = t;
                break;
            }
        for (auto& x : pivot_row) x = vmod(x * uinv);
        // eliminate below
        for (auto& r : work) {
            std::uint64_t x = r[(size_t)col];
            if (x == 0) continue;
            std::uint64_t q = x / upow((std::uint64_t)R->p(), bestv);
            for (long j = 0; j < width; ++j)
                r[(size_t)j] = vmod(r[(size_t)j] + (N - vmod(q * pivot_row[(size_t)j])));
        }
        // annihilator row: p^{a-v} * pivot still has content
        if (bestv > 0) {
            std::vector<std::uint64_t> ann((size_t)width);
            std::uint64_t mult = upow((std::uint64_t)R->p(), R->a() - bestv);
            for (long j = 0; j < width; ++j) ann[(size_t)j] = vmod(pivot_row[(size_t)j] * mult);
            bool nz = false;
            for (auto x : ann) nz |= (x != 0);
            if (nz) work.push_back(std::move(ann));
        }
        H.push_back(std::move(pivot_row));
    }
    for (auto& r : work) {
        bool nz = false;
        for (auto x : r) nz |= (x != 0);
        if (nz) H.push_back(r);
    }
    // rows with zero first block give kernel generators
    std::vector<std::vector<RingElem>> gens;
    for (const auto& r : H) {
        bool zero_first = true;
        for (long j = 0; j < n; ++j) zero_first &= (r[(size_t)j] == 0);
        if (!zero_first) continue;
        std::vector<RingElem> g((size_t)m, RingElem::zero(R));
        bool nz = false;
        for (long j = 0; j < m; ++j) {
            g[(size_t)j] = RingElem(R, {r[(size_t)(n + j)]});
            nz |= !g[(size_t)j].is_zero();
        }
        if (nz) gens.push_back(std::move(g));
    }
    return gens;
}

std::vector<std::vector<RingElem>> kernel(const FreeMap& f) {
    if (f.ring()->b() == 1) return kernel_howell(f);
    return kernel_enumeration(f);
}

// -------------------------------------------------------------------- ideal

Ideal::Ideal(std::shared_ptr<const ChainRing> R, std::vector<RingElem> gens)
    : R_(std::move(R)), gens_(std::move(gens)) {
    // additive closure of all s*g
    std::vector<RingElem> elems = {RingElem::zero(R_)};
    auto ring = enumerate_ring(R_);
    std::vector<std::uint64_t> seen = {0};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RingElem> next;
        for (const auto& e : elems)
            for (const auto& g : gens_)
                for (const auto& s : ring) {
                    RingElem v = e + s * g;
                    auto idx = v.index();
                    auto it = std::lower_bound(seen.begin(), seen.end(), idx);
                    if (it == seen.end() || *it != idx) {
                        seen.insert(it, idx);
                        next.push_back(v);
                        grew = true;
                    }
                }
        for (auto& v : next) elems.push_back(std::move(v));
    }
    std::sort(elems.begin(), elems.end());
    span_ = std::move(elems);
}

bool Ideal::contains(const RingElem& x) const {
    return std::binary_search(span_.begin(), span_.end(), x);
}

bool Ideal::operator==(const Ideal& o) const { return span_ == o.span_; }

Ideal Ideal::multiply(const Ideal& o) const {
    std::vector<RingElem> gens;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) gens.push_back(a * b);
    return Ideal(R_, std::move(gens));
}

bool Ideal::is_unit_ideal() const { return span_.size() == R_->size(); }

// ------------------------------------------------------------ wedge algebra

std::vector<std::vector<int>> wedge_basis(int n, int t) {
    std::vector<std::vector<int>> basis;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[(size_t)i] = i;
    if (t == 0) {
        basis.push_back({});
        return basis;
    }
    if (t > n) return basis;
    for (;;) {
        basis.push_back(idx);
        int i = t - 1;
        while (i >= 0 && idx[(size_t)i] == n - t + i) --i;
        if (i < 0) break;
        ++idx[(size_t)i];
        for (int j = i + 1; j < t; ++j) idx[(size_t)j] = idx[(size_t)(j - 1)] + 1;
    }
    return basis;
}

namespace {

long basis_rank(const std::vector<std::vector<int>>& basis,
                const std::vector<int>& tuple) {
    auto it = std::lower_bound(basis.begin(), basis.end(), tuple);
    if (it == basis.end() || *it != tuple)
        throw MathError("Internal", "wedge index lookup");
    return (long)(it - basis.begin());
}

}  // namespace

std::vector<RingElem> tilde_phi(const std::vector<RingElem>& phi_row,
                                const std::vector<RingElem>& wedge_vec, int n,
                                int t) {
    if (t < 1) throw MathError("BadInput", "tilde_phi needs t >= 1");
    auto R = phi_row.at(0).ring();
    auto src = wedge_basis(n, t);
    auto dst = wedge_basis(n, t - 1);
    std::vector<RingElem> out(dst.size(), RingElem::zero(R));
    for (size_t bi = 0; bi < src.size(); ++bi) {
        const RingElem& c = wedge_vec.at(bi);
        if (c.is_zero()) continue;
        const auto& tuple = src[bi];
        for (int i = 0; i < t; ++i) {
            std::vector<int> omitted;
            for (int j = 0; j < t; ++j)
                if (j != i) omitted.push_back(tuple[(size_t)j]);
            RingElem term = c * phi_row.at((size_t)tuple[(size_t)i]);
            if (i % 2 == 1) term = -term;
            long r = basis_rank(dst, omitted);
            out[(size_t)r] = out[(size_t)r] + term;
        }
    }
    return out;
}

std::vector<RingElem> delta_element(const FreeMap& phi) {
    auto R = phi.ring();
    int n = (int)phi.cols();  // ambient S^{a+r}
    int a = (int)phi.rows();
    int r = n - a;
    if (r < 0) throw MathError("BadInput", "need cols >= rows");
    // start from the top wedge e_1 ^ ... ^ e_n
    std::vector<RingElem> vec(1, RingElem::one(R));
    int t = n;
    for (int i = 0; i < a; ++i) {
        vec = tilde_phi(phi.row(i), vec, n, t);
        --t;
    }
    return vec;  // element of wedge^r S^n
}

RingElem determinant(const FreeMap& A) {
    if (A.rows() != A.cols()) throw MathError("BadInput", "determinant shape");
    long n = A.rows();
    auto R = A.ring();
    if (n == 0) return RingElem::one(R);
    // Laplace expansion along the first row
    if (n == 1) return A.at(0, 0);
    RingElem acc = RingElem::zero(R);
    for (long j = 0; j < n; ++j) {
        if (A.at(0, j).is_zero()) continue;
        FreeMap minor(R, n - 1, n - 1);
        for (long i = 1; i < n; ++i) {
            long cj = 0;
            for (long k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cj++) = A.at(i, k);
            }
        }
        RingElem term = A.at(0, j) * determinant(minor);
        if (j % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

Ideal fitting0(const FreeMap& A) {
    auto R = A.ring();
    long n = A.rows(), m = A.cols();
    if (m < n) return Ideal(R, {RingElem::zero(R)});
    std::vector<RingElem> minors;
    // all n x n column selections
    auto cols = wedge_basis((int)m, (int)n);
    for (const auto& sel : cols) {
        FreeMap sq(R, n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) sq.at(i, j) = A.at(i, sel[(size_t)j]);
        minors.push_back(determinant(sq));
    }
    return Ideal(R, std::move(minors));
}

// ------------------------------------------------------------------ reports

bool delta_in_bidual(const FreeMap& phi) {
    int n = (int)phi.cols();
    int r = n - (int)phi.rows();
    if (r < 1) return true;  // nothing to contract
    auto d = delta_element(phi);
    for (long i = 0; i < phi.rows(); ++i) {
        auto contracted = tilde_phi(phi.row(i), d, n, r);
        for (const auto& x : contracted)
            if (!x.is_zero()) return false;
    }
    return true;
}

FittStarkReport verify_fitt_stark(const FreeMap& phi) {
    auto R = phi.ring();
    auto d = delta_element(phi);
    Ideal im_delta(R, d);
    Ideal fitt = fitting0(phi);
    FittStarkReport rep;
    rep.equal = im_delta == fitt;
    if (!rep.equal) {
        std::ostringstream os;
        os << "im(delta) has " << im_delta.elements().size()
           << " elements, Fitt0 has " << fitt.elements().size();
        rep.detail = os.str();
    }
    return rep;
}

namespace {

// enumerate a submodule of S^m generated by gens; returns sorted index keys
std::vector<std::vector<std::uint64_t>> submodule_elements(
    const std::shared_ptr<const ChainRing>& R,
    const std::vector<std::vector<RingElem>>& gens, long m) {
    return span_indices(R, gens, m);
}

}  // namespace

MatlisReport bidual_matlis_check(const FreeMap& A) {
    auto R = A.ring();
    long n = A.rows();  // M = coker(A: S^m -> S^n)
    // |M| = |S^n| / |im A|
    double sn = 1;
    for (long i = 0; i < n; ++i) sn *= (double)R->size();
    if (sn > (double)kEnumerationBudget)
        throw BudgetExceeded("module too large for Matlis enumeration");
    std::vector<std::vector<RingElem>> cols;
    for (long j = 0; j < A.cols(); ++j) {
        std::vector<RingElem> col((size_t)n, RingElem::zero(R));
        for (long i = 0; i < n; ++i) col[(size_t)i] = A.at(i, j);
        cols.push_back(std::move(col));
    }
    auto image = submodule_elements(R, cols, n);
    std::uint64_t msize = (std::uint64_t)(sn / (double)image.size() + 0.5);

    // M* = ker(A^T): generators w_1..w_r of the functionals on S^n killing im A
    auto dual_gens = kernel(A.transpose());
    long r = (long)dual_gens.size();
    // presentation of M*: relations = kernel of S^r -> S^n sending e_i -> w_i
    FreeMap W(R, n, std::max(r, 1L));
    for (long j = 0; j < r; ++j)
        for (long i = 0; i < n; ++i) W.at(i, j) = dual_gens[(size_t)j][(size_t)i];
    auto rel = kernel(W);  // subset of S^r
    long q = (long)rel.size();
    FreeMap B(R, std::max(r, 1L), std::max(q, 1L));
    for (long j = 0; j < q; ++j)
        for (long i = 0; i < r; ++i) B.at(i, j) = rel[(size_t)j][(size_t)i];
    // M** = ker(B^T) inside the dual of S^r
    auto bidual_gens = kernel(B.transpose());
    auto bidual = submodule_elements(R, bidual_gens, std::max(r, 1L));
    std::uint64_t bsize = r == 0 ? 1 : (std::uint64_t)bidual.size();

    // canonical map: [v] -> (w_i . v)_i; injectivity: v with all pairings 0
    // and v not in im A would witness a kernel
    std::uint64_t killed = 0;
    {
        // enumerate S^n within budget and count v with w.v = 0 for all w
        std::uint64_t total = 1;
        for (long i = 0; i < n; ++i) total *= R->size();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<RingElem> v((size_t)n, RingElem::zero(R));
            std::uint64_t t = idx;
            for (long i = 0; i < n; ++i) {
                v[(size_t)i] = RingElem::from_index(R, t % R->size());
                t /= R->size();
            }
            bool all_zero = true;
            for (long j = 0; j < r && all_zero; ++j) {
                RingElem acc = RingElem::zero(R);
                for (long i = 0; i < n; ++i)
                    acc = acc + dual_gens[(size_t)j][(size_t)i] * v[(size_t)i];
                all_zero &= acc.is_zero();
            }
            if (all_zero) ++killed;
        }
    }
    MatlisReport rep;
    rep.module_size = msize;
    rep.bidual_size = bsize;
    // injective iff the pairing kernel is exactly im A; surjective iff the
    // sizes then agree
    rep.bijective = (killed == image.size()) && (msize == bsize);
    return rep;
}

bool is_regular_element(const RingElem& r) {
    auto R = r.ring();
    for (std::uint64_t i = 1; i < R->size(); ++i) {
        RingElem x = RingElem::from_index(R, i);
        if ((x * r).is_zero()) return false;
    }
    return true;
}

DetMultReport det_cokernel_multiplicative(const RingElem& r1, const RingElem& r2) {
    auto R = r1.ring();
    DetMultReport rep;
    rep.regular1 = is_regular_element(r1);
    rep.regular2 = is_regular_element(r2);
    if (!rep.regular1 || !rep.regular2)
        throw NotRegular("det multiplicativity needs regular elements");
    auto present = [&](const RingElem& x) {
        FreeMap A(R, 1, 1);
        A.at(0, 0) = x;
        return A;
    };
    Ideal lhs = fitting0(present(r1 * r2));
    Ideal rhs = fitting0(present(r1)).multiply(fitting0(present(r2)));
    rep.product_matches = lhs == rhs;
    return rep;
}

}  // namespace padictk
