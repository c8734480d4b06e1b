#include "msl/mseg_gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "msl/classify.hpp"

namespace msl {

void GenConfig::validate() const {
    if (max_segments < 1) throw std::invalid_argument("max_segments must be >= 1");
    if (coord_min > coord_max) throw std::invalid_argument("empty coordinate range");
}

Segment random_segment(SplitMix64& rng, int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    int x = lo + static_cast<int>(rng.below(span));
    int y = lo + static_cast<int>(rng.below(span));
    return Segment(std::min(x, y), std::max(x, y));
}

Multisegment random_multisegment(SplitMix64& rng, const GenConfig& cfg) {
    cfg.validate();
    const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.max_segments)));
    std::vector<Segment> segs;
    segs.reserve(count);
    for (int i = 0; i < count; ++i) segs.push_back(random_segment(rng, cfg.coord_min, cfg.coord_max));
    return Multisegment(std::move(segs));
}

Multisegment random_filtered(SplitMix64& rng, const GenConfig& cfg, const GenFilters& filters,
                             int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Multisegment m = random_multisegment(rng, cfg);
        if (filters.ladder && !is_ladder(m)) continue;
        if (filters.speh && !is_speh(m)) continue;
        if ((filters.regular || filters.balanced) && !is_regular(m)) continue;
        if (filters.balanced && !is_balanced(m).balanced) continue;
        return m;
    }
    throw std::runtime_error("random_filtered: filters too restrictive for the range");
}

Multisegment random_ladder(SplitMix64& rng, int max_segments, int lo, int hi) {
    const int span = hi - lo + 1;
    const int kmax = std::min(max_segments, span);
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(kmax)));

    auto distinct_desc = [&](int n) {
        std::set<int> vals;
        while (static_cast<int>(vals.size()) < n)
            vals.insert(lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(span))));
        return std::vector<int>(vals.rbegin(), vals.rend());
    };

    for (;;) {
        std::vector<int> as = distinct_desc(k);
        std::vector<int> bs = distinct_desc(k);
        bool ok = true;
        for (int i = 0; i < k; ++i)
            if (as[i] > bs[i]) { ok = false; break; }
        if (!ok) continue;
        std::vector<Segment> segs;
        for (int i = 0; i < k; ++i) segs.emplace_back(as[i], bs[i]);
        return Multisegment(std::move(segs));
    }
}

Multisegment random_speh(SplitMix64& rng, int max_segments, int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    int x = lo + static_cast<int>(rng.below(span));
    int y = lo + static_cast<int>(rng.below(span));
    Segment top(std::min(x, y), std::max(x, y));
    const int room = top.a - lo + 1;  // shifts that stay inside the range
    const int kmax = std::min(max_segments, room);
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(kmax)));
    std::vector<Segment> segs;
    Segment cur = top;
    for (int i = 0; i < k; ++i) {
        segs.push_back(cur);
        if (i + 1 < k) cur = shift(cur);
    }
    return Multisegment(std::move(segs));
}

}  // namespace msl
