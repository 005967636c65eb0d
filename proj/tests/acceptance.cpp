// acceptance driver: one line per criterion, nonzero exit on any failure
#include <cstdio>

#include "padictk/acceptance.hpp"

int main() {
    bool all = true;
    for (int id = 1; id <= 10; ++id) {
        auto r = padictk::run_criterion(id);
        std::printf("[%s] criterion %2d: %-32s (%.2fs) %s\n",
                    r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.pass ? "" : r.detail.c_str());
        std::fflush(stdout);
        all &= r.pass;
    }
    return all ? 0 : 1;
}
