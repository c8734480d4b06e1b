#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msl/multisegment.hpp"

namespace msl {

/// A listing of the segments with no earlier segment preceding a later one.
/// The canonical order already has this property (precedes forces a strictly
/// larger right endpoint), so this returns the canonical listing.
std::vector<Segment> arranged_form(const Multisegment& m);

/// Strictly decreasing left and right endpoints along the arranged listing.
bool is_ladder(const Multisegment& m);

/// Each segment is the unit shift of the previous one.
bool is_speh(const Multisegment& m);

/// All left endpoints distinct and all right endpoints distinct.
bool is_regular(const Multisegment& m);

/// An ordered sub-multiset exhibiting one of the two forbidden patterns.
/// The stored listing (Delta_1, ..., Delta_k) satisfies the three defining
/// conditions of its kind; witness_valid re-evaluates them from scratch.
struct PatternWitness {
    enum class Kind { type4231, type3412 };
    Kind kind;
    std::vector<Segment> ordered;
};

bool witness_valid(const PatternWitness& w);
std::string to_string(PatternWitness::Kind k);

struct BalancedResult {
    bool balanced;
    std::optional<PatternWitness> witness;
};

/// Pattern search over ordered sub-multisets, pruned on the chain condition.
/// Exponential in the segment count; intended for desk scale (<= 12 segments).
/// Throws std::invalid_argument when m is not regular.
BalancedResult is_balanced(const Multisegment& m);

}  // namespace msl
