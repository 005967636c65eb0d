#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "padictk/errors.hpp"

namespace padictk {

// The chain ring S = (Z/p^a)[x]/(x^b): a 0-dimensional Gorenstein local
// ring (complete intersection) with maximal ideal (p, x) and p^{ab} elements.
class ChainRing {
public:
    ChainRing(long p, int a, int b);

    long p() const { return p_; }
    int a() const { return a_; }
    int b() const { return b_; }
    std::uint64_t pa() const { return pa_; }  // p^a
    std::uint64_t size() const { return size_; }

    std::string str() const;
    bool operator==(const ChainRing& o) const {
        return p_ == o.p_ && a_ == o.a_ && b_ == o.b_;
    }

private:
    long p_;
    int a_, b_;
    std::uint64_t pa_, size_;
};

// ring element: coefficient vector c_0 + c_1 x + ... + c_{b-1} x^{b-1}
class RingElem {
public:
    RingElem() = default;
    RingElem(std::shared_ptr<const ChainRing> R, std::vector<std::uint64_t> c);
    static RingElem zero(std::shared_ptr<const ChainRing> R);
    static RingElem one(std::shared_ptr<const ChainRing> R);
    static RingElem from_index(std::shared_ptr<const ChainRing> R,
                               std::uint64_t index);
    std::uint64_t index() const;  // position in the canonical enumeration

    const std::shared_ptr<const ChainRing>& ring() const { return R_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_unit() const;  // constant coefficient prime to p

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    bool operator==(const RingElem& o) const { return c_ == o.c_; }
    bool operator<(const RingElem& o) const { return c_ < o.c_; }

    std::string str() const;

private:
    std::shared_ptr<const ChainRing> R_;
    std::vector<std::uint64_t> c_;
};

// all |S| elements in the canonical order (index 0 = zero)
std::vector<RingElem> enumerate_ring(const std::shared_ptr<const ChainRing>& R);

// S-module map S^m -> S^n given by an n x m matrix
class FreeMap {
public:
    FreeMap(std::shared_ptr<const ChainRing> R, long rows, long cols);
    static FreeMap from_entries(std::shared_ptr<const ChainRing> R, long rows,
                                long cols, std::vector<RingElem> row_major);

    long rows() const { return n_; }
    long cols() const { return m_; }
    const RingElem& at(long i, long j) const { return e_[(size_t)(i * m_ + j)]; }
    RingElem& at(long i, long j) { return e_[(size_t)(i * m_ + j)]; }
    const std::shared_ptr<const ChainRing>& ring() const { return R_; }

    std::vector<RingElem> apply(const std::vector<RingElem>& v) const;
    FreeMap transpose() const;
    FreeMap compose(const FreeMap& inner) const;  // this o inner
    std::vector<RingElem> row(long i) const;

private:
    std::shared_ptr<const ChainRing> R_;
    long n_, m_;
    std::vector<RingElem> e_;
};

inline constexpr std::uint64_t kEnumerationBudget = 1000000;

// generating set of ker(f); exhaustive enumeration within the budget, or
// the Howell-form path over Z/p^a when b = 1
std::vector<std::vector<RingElem>> kernel(const FreeMap& f);
std::vector<std::vector<RingElem>> kernel_enumeration(const FreeMap& f);
std::vector<std::vector<RingElem>> kernel_howell(const FreeMap& f);

// ideal given by a generating list; the span is the additive closure of the
// S-multiples (ideals here are small: subsets of S)
class Ideal {
public:
    Ideal(std::shared_ptr<const ChainRing> R, std::vector<RingElem> gens);
    const std::vector<RingElem>& generators() const { return gens_; }
    const std::vector<RingElem>& elements() const { return span_; }
    bool contains(const RingElem& x) const;
    bool operator==(const Ideal& o) const;
    Ideal multiply(const Ideal& o) const;
    bool is_unit_ideal() const;

private:
    std::shared_ptr<const ChainRing> R_;
    std::vector<RingElem> gens_;
    std::vector<RingElem> span_;  // sorted
};

// --- exterior algebra ---

// basis of wedge^t S^n: strictly increasing index tuples, ranked lex
std::vector<std::vector<int>> wedge_basis(int n, int t);

// contraction along a row functional phi: wedge^t S^n -> wedge^{t-1} S^n,
// m_1 ^ ... ^ m_t -> sum (-1)^{i-1} phi(m_i) (omit i)
std::vector<RingElem> tilde_phi(const std::vector<RingElem>& phi_row,
                                const std::vector<RingElem>& wedge_vec, int n,
                                int t);

// delta = (tilde phi_a o ... o tilde phi_1)(e_1 ^ ... ^ e_{a+r}) for a map
// phi: S^{a+r} -> S^a; lands in wedge^r S^{a+r}
std::vector<RingElem> delta_element(const FreeMap& phi);

// Fitt^0(coker A) = ideal of maximal minors of the n x m presentation A
Ideal fitting0(const FreeMap& presentation);

RingElem determinant(const FreeMap& square);

// --- reports ---

struct FittStarkReport {
    bool equal;
    std::string detail;
};
// im(delta) (the ideal of wedge coordinates of delta) against
// Fitt^0(coker phi), decided by two-sided span membership
FittStarkReport verify_fitt_stark(const FreeMap& phi);

// one further contraction of delta against every row vanishes
bool delta_in_bidual(const FreeMap& phi);

struct MatlisReport {
    std::uint64_t module_size;
    std::uint64_t bidual_size;
    bool bijective;
};
// M -> M** for M = coker(presentation), via kernel computations and the
// canonical evaluation pairing
MatlisReport bidual_matlis_check(const FreeMap& presentation);

struct DetMultReport {
    bool regular1, regular2;
    bool product_matches;  // Fitt0(S/r1 r2) = Fitt0(S/r1) Fitt0(S/r2)
};
DetMultReport det_cokernel_multiplicative(const RingElem& r1, const RingElem& r2);

bool is_regular_element(const RingElem& r);

}  // namespace padictk
