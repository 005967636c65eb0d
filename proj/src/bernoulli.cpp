#include "padictk/bernoulli.hpp"

#include <deque>
#include <mutex>

namespace padictk {

const Rat& bernoulli_number(unsigned long n) {
    static std::mutex mu;
    static std::deque<Rat> cache = {Rat(1), Rat(-1, 2)};
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        unsigned long m = cache.size();
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rat s = 0;
        for (unsigned long k = 0; k < m; ++k)
            s += Rat(binom_int((long)(m + 1), k)) * cache[k];
        cache.push_back(-s / Rat(binom_int((long)(m + 1), m)));
    }
    return cache[n];
}

Rat bernoulli_polynomial(unsigned long n, const Rat& x) {
    Rat s = 0;
    Rat xp = 1;  // x^(n-k) accumulated from the top
    for (long k = (long)n; k >= 0; --k) {
        s += Rat(binom_int((long)n, (unsigned long)k)) *
             bernoulli_number((unsigned long)k) * xp;
        xp *= x;
    }
    return s;
}

}  // namespace padictk
