#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "padictk/cyclotomic.hpp"
#include "padictk/unramified.hpp"

namespace padictk {

// Dirichlet character mod f, stored through the canonical generator
// decomposition of (Z/f)^* with exponent images; value tables are built
// lazily per unit-group component.
class DirichletCharacter {
public:
    explicit DirichletCharacter(long modulus = 1);  // trivial character

    static DirichletCharacter trivial(long f) { return DirichletCharacter(f); }
    // Teichmuller character mod p, calibrated so that its p-adic embedding
    // agrees pointwise with the Teichmuller lift
    static DirichletCharacter omega(long p);
    // Kronecker character of a fundamental discriminant, modulus |D|
    static DirichletCharacter kronecker_character(long D);
    // chi(g) = zeta_order^e for each [g, e]; the g must generate (Z/f)^*
    static DirichletCharacter from_generator_images(
        long modulus, const std::vector<std::pair<long, long>>& images, long order);

    long modulus() const { return f_; }
    long order() const { return order_; }

    // exponent e with chi(a) = zeta_order^e, or nullopt when gcd(a, f) > 1
    std::optional<long> exponent(long a) const;
    CyclotomicElement value(long a) const;
    // character value as an exact rational when the order divides 2
    Rat value_rat(long a) const;

    bool is_even() const;  // chi(-1) = 1
    bool is_trivial() const { return order_ == 1; }

    long conductor() const;
    bool is_primitive() const { return conductor() == f_; }
    DirichletCharacter primitive_part() const;
    // the character mod lcm(f, M) inducing this one
    DirichletCharacter extend(long M) const;

    DirichletCharacter operator*(const DirichletCharacter& o) const;
    DirichletCharacter inverse() const;
    DirichletCharacter power(long k) const;

    bool operator==(const DirichletCharacter& o) const;

    // canonical generators of (Z/f)^* with their orders and chi-exponents
    struct GenImage {
        long g;
        long gen_order;
        long chi_exponent;  // chi(g) = zeta_order^chi_exponent
    };
    std::vector<GenImage> generator_images() const;

    std::string label() const;

private:
    long f_;
    long order_;
    // one entry per unit-group component (q^e piece, possibly two for 2^e)
    struct Component {
        long q_pow;     // the prime power q^e
        long gen;       // generator lifted to (Z/f)^* (== 1 mod f/q^e)
        long gen_ord;   // order of gen
        long t;         // chi(gen) = zeta_{gen_ord}^t
        std::vector<long> dlog;  // residue mod q_pow -> exponent, -1 if not in <gen>
    };
    std::vector<Component> comps_;
    void build_components();
    void recompute_order();
};

// Gauss sum of a primitive character, exact in Q(zeta_lcm(f, order))
CyclotomicElement gauss_sum(const DirichletCharacter& chi);

// |tau(chi)|^2 as an exact rational (tau * conj tau); for large fields it
// switches to the Ramanujan-sum expansion, which stays in Q(zeta_order)
Rat gauss_norm_squared(const DirichletCharacter& chi);

// generalized Bernoulli number B_{n, chi} = f^{n-1} sum_a chi(a) B_n(a/f);
// rational for characters of order <= 2, cyclotomic otherwise
CyclotomicElement gen_bernoulli(unsigned long n, const DirichletCharacter& chi);

using EmbeddedValue = std::variant<PadicNumber, UnramifiedElement>;

// embedding of Q(zeta_m) at p via the canonical Hensel-lifted factor;
// lands in Q_p exactly when the order of p mod m is 1
EmbeddedValue embed_padic(const CyclotomicElement& x, long p, long N);
PadicNumber embed_padic_qp(const CyclotomicElement& x, long p, long N);

// chi(a) embedded in Z_p (requires order(chi) | p-1)
PadicNumber char_value_qp(const DirichletCharacter& chi, long a, long p, long N);

}  // namespace padictk
