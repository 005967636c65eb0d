#pragma once

#include <set>
#include <string>

#include "padictk/util.hpp"

namespace padictk {

enum class Region3 { Balanced, F, G, H };
enum class Region2 { Ad, F };

std::string region3_name(Region3 r);
std::string region2_name(Region2 r);

struct WeightTriple {
    long k, l, m;  // w(kappa), w(lambda), w(mu)
    long central() const { return (k + l + m) / 2 - 1; }
};

struct Classification3 {
    Region3 region;
    long central;  // (k+l+m)/2 - 1
    bool tie;      // max attained twice with sum = 2 max
};

// balanced iff k+l+m > 2 max; otherwise the dominant weight's region, with
// the boundary sum = 2 max assigned to the dominant side
Classification3 classify3(const WeightTriple& w);

// W_2^ad: 2l > k; W_2^f: 2l <= k
Region2 classify2(long k, long l);

// global sign eps = eps_infty(region) * prod_{v | N} eps_v
int global_sign(Region3 region, int finite_prod);

// the identically vanishing p-adic L-functions for the given finite sign
std::set<Region3> forced_vanishing(int finite_prod);

struct SelfDualSigns {
    int eps_triple;   // eps(f x g x g^c)
    int eps_adjoint;  // eps(f x ad0 g)
};

// the sign table in the h = g^c setting with trivial eps_f
SelfDualSigns selfdual_table(Region2 region, int eps_f);

// |rank X^{c=+1} - rank F^+ X|
long panchishkin_defect(long rank_plus_eigenspace, long rank_Fplus);

}  // namespace padictk
