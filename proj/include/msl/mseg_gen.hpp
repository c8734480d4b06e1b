#pragma once

#include "msl/fp.hpp"
#include "msl/multisegment.hpp"

namespace msl {

struct GenConfig {
    int max_segments = 4;
    int coord_min = 0;
    int coord_max = 6;

    void validate() const;  // max_segments >= 1, nonempty coordinate range
};

struct GenFilters {
    bool ladder = false;
    bool speh = false;
    bool regular = false;
    bool balanced = false;  // implies regular
};

Segment random_segment(SplitMix64& rng, int lo, int hi);

/// Segment count uniform in [1, max_segments], endpoints uniform in the
/// coordinate range (two draws, sorted), then canonicalized.
Multisegment random_multisegment(SplitMix64& rng, const GenConfig& cfg);

/// Rejection sampling until every requested filter holds. Throws
/// std::runtime_error if the cap of attempts is exhausted.
Multisegment random_filtered(SplitMix64& rng, const GenConfig& cfg, const GenFilters& filters,
                             int max_attempts = 200000);

/// Strictly decreasing left and right endpoint sets, drawn directly.
Multisegment random_ladder(SplitMix64& rng, int max_segments, int lo, int hi);

/// A shift-chain from a random top segment, clipped to the range.
Multisegment random_speh(SplitMix64& rng, int max_segments, int lo, int hi);

}  // namespace msl
