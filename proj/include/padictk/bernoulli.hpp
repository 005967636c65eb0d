#pragma once

#include <vector>

#include "padictk/util.hpp"

namespace padictk {

// Bernoulli numbers with B_1 = -1/2, via the standard recurrence.
// bernoulli_polynomial uses B_n(x) = sum_k C(n,k) B_k x^{n-k}, so that
// B_n(1) = (-1)^n B_n; summing B_n(a/f) over a = 1..f therefore realizes
// the B_1-at-trivial-character convention +1/2 without special cases.
const Rat& bernoulli_number(unsigned long n);

Rat bernoulli_polynomial(unsigned long n, const Rat& x);

}  // namespace padictk
