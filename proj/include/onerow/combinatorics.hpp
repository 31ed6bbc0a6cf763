#pragma once

#include <vector>

namespace onerow {

// Weak compositions of total into `parts` parts, lexicographic order.
template <class Fn>
void for_each_composition(int total, int parts, Fn&& fn) {
    if (parts <= 0) {
        if (total == 0) {
            std::vector<int> empty;
            fn(empty);
        }
        return;
    }
    std::vector<int> c(parts, 0);
    auto rec = [&](auto& self, int i, int left) -> void {
        if (i == parts - 1) {
            c[i] = left;
            fn(c);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            c[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, total);
}

inline long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace onerow
