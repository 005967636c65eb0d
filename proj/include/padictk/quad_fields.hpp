#pragma once

#include <array>
#include <vector>

#include "padictk/dirichlet.hpp"

namespace padictk {

// invariants of the imaginary quadratic field of fundamental discriminant D
class QuadField {
public:
    explicit QuadField(long D);

    long discriminant() const { return D_; }
    long class_number() const { return h_; }
    long torsion_order() const { return omega_; }  // # roots of unity
    DirichletCharacter kronecker_char() const;     // eps_K mod |D|, odd

    bool splits(long p) const { return kronecker(Int(D_), Int(p)) == 1; }

    // the reduced primitive forms counted by class_number
    const std::vector<std::array<long, 3>>& reduced_forms() const {
        return forms_;
    }

private:
    long D_, h_, omega_;
    std::vector<std::array<long, 3>> forms_;
};

// reduced-form count; NotFundamental for non-fundamental input
long class_number(long D);

struct ClassNumberFormulaReport {
    long D;
    long h_forms;      // reduced-form count
    long omega;        // torsion units
    Rat B1;            // B_{1, eps_K}
    bool holds;        // h = omega |B1| / 2
};

// exact check of h = omega_K |B_{1,eps_K}| / 2
ClassNumberFormulaReport class_number_formula_check(long D);

struct PiLogResult {
    long a, b;          // u = (a + b sqrt(m))/denom with m = D or D/4
    long denom;         // 1 or 2
    bool conjugated;    // true if the conjugate was taken to get the unit
    PadicNumber log_u;  // Iwasawa log of the embedded p-unit
    PadicNumber u_embedded;
};

// searches x in O_K with norm p^{h_K} generating p-prime-power ideal, embeds
// sqrt(D) via the least-seed Hensel branch, and returns plog of the member
// that is a p-adic unit
PiLogResult pi_log(long D, long p, long N);

}  // namespace padictk
