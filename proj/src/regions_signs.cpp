#include "padictk/regions_signs.hpp"

#include <algorithm>

namespace padictk {

std::string region3_name(Region3 r) {
    switch (r) {
        case Region3::Balanced: return "bal";
        case Region3::F: return "f";
        case Region3::G: return "g";
        case Region3::H: return "h";
    }
    return "?";
}

std::string region2_name(Region2 r) {
    return r == Region2::Ad ? "ad" : "f";
}

Classification3 classify3(const WeightTriple& w) {
    if (w.k < 1 || w.l < 1 || w.m < 1)
        throw MathError("BadInput", "weights must be >= 1");
    if ((w.k + w.l + w.m) % 2 != 0)
        throw ParityViolation("odd weight sum has no integral central point");
    long sum = w.k + w.l + w.m;
    long mx = std::max({w.k, w.l, w.m});
    Classification3 out{};
    out.central = sum / 2 - 1;
    if (sum > 2 * mx) {
        out.region = Region3::Balanced;
        out.tie = false;
        return out;
    }
    // dominant side; lexicographically first label on a tie
    int count = (w.k == mx) + (w.l == mx) + (w.m == mx);
    out.tie = (count > 1) && (sum == 2 * mx);
    if (w.k == mx)
        out.region = Region3::F;
    else if (w.l == mx)
        out.region = Region3::G;
    else
        out.region = Region3::H;
    return out;
}

Region2 classify2(long k, long l) {
    return 2 * l > k ? Region2::Ad : Region2::F;
}

int global_sign(Region3 region, int finite_prod) {
    int eps_inf = region == Region3::Balanced ? -1 : +1;
    return eps_inf * finite_prod;
}

std::set<Region3> forced_vanishing(int finite_prod) {
    if (finite_prod == +1) return {Region3::Balanced};
    return {Region3::F, Region3::G, Region3::H};
}

SelfDualSigns selfdual_table(Region2 region, int eps_f) {
    SelfDualSigns s{};
    if (region == Region2::Ad) {
        s.eps_triple = -1;
        s.eps_adjoint = -eps_f;
    } else {
        s.eps_triple = +1;
        s.eps_adjoint = eps_f;
    }
    return s;
}

long panchishkin_defect(long rank_plus_eigenspace, long rank_Fplus) {
    if (rank_plus_eigenspace < 0 || rank_Fplus < 0)
        throw MathError("BadInput", "ranks must be non-negative");
    long d = rank_plus_eigenspace - rank_Fplus;
    return d < 0 ? -d : d;
}

}  // namespace padictk
