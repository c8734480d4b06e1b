#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msl/multisegment.hpp"

namespace msl {

/// Index pair into the arranged listings; i points into the Delta list,
/// j into the Gamma list. 0-based in memory, 1-based in diagnostics.
struct IndexPair {
    int i;
    int j;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// The data of the matching computation for an ordered pair of listings:
///   X = {(i,j) : Delta_i precedes Gamma_j}
///   Y = {(i,j) : shift(Delta_i) precedes Gamma_j}
/// with arrows from Y to X:
///   (r,s) ~> (r',s')  iff  r = r' and Gamma_s precedes Gamma_{s'}
///                      or  s = s' and Delta_{r'} precedes Delta_r.
struct MatchingInstance {
    std::vector<Segment> delta;  // arranged listing supplying the Delta's
    std::vector<Segment> gamma;  // arranged listing supplying the Gamma's
    std::vector<IndexPair> x_set;
    std::vector<IndexPair> y_set;
    std::vector<std::pair<int, int>> arrows;  // (index into y_set, index into x_set)
};

/// delta_source supplies the Delta's, gamma_source the Gamma's.
MatchingInstance build_instance(const Multisegment& delta_source,
                                const Multisegment& gamma_source);

/// A maximum matching function: an injective f from a subset I of X into Y
/// with f(i) ~> i for every i in I. Only the cardinality is canonical.
struct BestMatching {
    std::vector<int> y_for_x;  // per x_set index, matched y_set index or -1
    int size = 0;
};

/// Maximum cardinality via Hopcroft-Karp on the arrow graph.
BestMatching best_matching(const MatchingInstance& inst);

/// hom and Coxeter-cokernel dimensions for the ordered pair (m, n) in the
/// ladder range: #Y \ f(I) and #X \ I on the instance with the Delta's
/// drawn from n and the Gamma's from m (the binding that reproduces the
/// closed forms and the base cases; see the tests).
/// Throws std::invalid_argument unless m or n is a ladder.
std::int64_t hom_via_matching(const Multisegment& m, const Multisegment& n);
std::int64_t coker_via_matching(const Multisegment& m, const Multisegment& n);

std::string to_diagnostic_string(const MatchingInstance& inst, const BestMatching& bm);

}  // namespace msl
