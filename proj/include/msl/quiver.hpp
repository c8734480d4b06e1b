#pragma once

#include <cstdint>
#include <map>

#include "msl/dim_vector.hpp"
#include "msl/fp_matrix.hpp"
#include "msl/multisegment.hpp"

namespace msl {

enum class QuiverDir { plus, minus };

/// Graded vector space with a degree +1 or -1 map family. maps[i] sends
/// degree i to degree i+1 (plus) or i-1 (minus); absent keys are zero maps.
struct QuiverRep {
    QuiverDir dir;
    DimVector dims;
    std::map<int, FpMatrix> maps;
    std::uint64_t prime;
};

/// Direct sum of ascending interval modules: one scalar 1 in degrees
/// a..b-1 per segment [a,b], block diagonal across segments.
QuiverRep mu_plus(const Multisegment& m, std::uint64_t prime = kDefaultPrime);

/// Descending counterpart: scalars sit in degrees a+1..b.
QuiverRep mu_minus(const Multisegment& m, std::uint64_t prime = kDefaultPrime);

// Closed forms for interval modules over the ascending orientation.
int hom_qplus_segments(const Segment& d, const Segment& g);   // 1 iff shift(g) precedes d
int ext1_qplus_segments(const Segment& d, const Segment& g);  // 1 iff d precedes g

// Additive extensions over direct sums of interval modules.
std::int64_t hom_qplus(const Multisegment& x, const Multisegment& y);
std::int64_t ext1_qplus(const Multisegment& x, const Multisegment& y);

/// alpha_plus(x, y) = hom_{Q+}(x, y) - ext1_{Q+}(y, x).
std::int64_t alpha_plus(const Multisegment& m, const Multisegment& n);

/// Per-pair value of alpha_plus in {-1, 0, 1}; equals
/// hom_qplus_segments(d, g) - ext1_qplus_segments(g, d).
int alpha_plus_segment_pair(const Segment& d, const Segment& g);

/// alpha(m, n) = -(grdim m, grdim n). Symmetric.
std::int64_t alpha(const Multisegment& m, const Multisegment& n);

/// (dim Hom, dim Ext^1) for two representations of the same orientation,
/// computed from the kernel and cokernel of the presentation map
/// phi |-> (M^y_i phi_i - phi_{i+step} M^x_i)_i. Independent of the
/// interval-module closed forms above.
std::pair<std::int64_t, std::int64_t> hom_ext_qrep(const QuiverRep& x, const QuiverRep& y);

}  // namespace msl
