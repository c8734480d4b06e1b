#include "msl/az.hpp"

#include <algorithm>

namespace msl {

Multisegment az_involution(const Multisegment& m) {
    // pool stays in canonical order, so pool[0] realizes the maximal right
    // endpoint with the largest left endpoint among those.
    std::vector<Segment> pool = m.segments();
    std::vector<Segment> out;

    while (!pool.empty()) {
        std::vector<std::size_t> chain;
        chain.push_back(0);
        int cur_b = pool[0].b;
        int cur_a = pool[0].a;
        const int e = cur_b;

        for (;;) {
            // Extension: b exactly one less and a strictly smaller, the
            // linkage condition; ties go to the maximal a. Canonical order
            // makes the first hit the right one.
            std::size_t next = pool.size();
            for (std::size_t j = chain.back() + 1; j < pool.size(); ++j) {
                if (pool[j].b > cur_b - 1) continue;
                if (pool[j].b < cur_b - 1) break;
                if (pool[j].a < cur_a) { next = j; break; }
            }
            if (next == pool.size()) break;
            chain.push_back(next);
            cur_b = pool[next].b;
            cur_a = pool[next].a;
        }

        const int r = static_cast<int>(chain.size());
        out.emplace_back(e - r + 1, e);

        std::vector<Segment> rest;
        rest.reserve(pool.size());
        std::size_t ci = 0;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (ci < chain.size() && chain[ci] == j) {
                ++ci;
                if (pool[j].b - 1 >= pool[j].a) rest.emplace_back(pool[j].a, pool[j].b - 1);
            } else {
                rest.push_back(pool[j]);
            }
        }
        std::sort(rest.begin(), rest.end(), canonical_less);
        pool = std::move(rest);
    }
    return Multisegment(std::move(out));
}

bool az_is_involution_check(const Multisegment& m) {
    return az_involution(az_involution(m)) == m;
}

}  // namespace msl
