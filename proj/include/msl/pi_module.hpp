#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "msl/dim_vector.hpp"
#include "msl/fp_matrix.hpp"
#include "msl/multisegment.hpp"
#include "msl/quiver.hpp"

namespace msl {

struct SampleConfig {
    std::uint64_t prime = kDefaultPrime;
    int samples = 8;
    std::uint64_t seed = 0;

    /// prime must be a prime in (10^6, 2^32); samples >= 1.
    void validate() const;
};

/// A point of the characteristic variety: graded maps S (degree +1) and
/// T (degree -1) over F_p satisfying T_{i+1} S_i = S_{i-1} T_i exactly
/// at every coordinate. Absent keys are zero maps.
struct PiModule {
    DimVector dims;
    std::map<int, FpMatrix> S;  // S[i]: dims[i+1] x dims[i]
    std::map<int, FpMatrix> T;  // T[i]: dims[i-1] x dims[i]
    std::uint64_t prime = kDefaultPrime;
};

/// Exact check of the defining relation (zero residual over F_p).
bool moment_map_holds(const PiModule& x);

/// Samples points of the component attached to m: S is pinned to the
/// interval-module base point mu_plus(m) and T is drawn uniformly from
/// the linear fiber of the relation. The fiber's nullspace basis is
/// computed once at construction; each draw is a seeded random
/// combination, deterministic in (seed, draw_index).
class FiberSampler {
public:
    FiberSampler(const Multisegment& m, std::uint64_t prime);

    PiModule draw(std::uint64_t seed, std::uint64_t draw_index) const;
    std::size_t fiber_dim() const { return basis_.rows(); }

private:
    struct TBlock {
        int coord;
        std::size_t rows, cols, offset;
    };
    DimVector dims_;
    std::map<int, FpMatrix> s_maps_;
    std::vector<TBlock> t_blocks_;
    std::size_t t_unknowns_ = 0;
    FpMatrix basis_;
    std::uint64_t prime_;
};

PiModule generic_point(const Multisegment& m, const SampleConfig& cfg, std::uint64_t draw_index);

/// dim Hom over the doubled quiver with the relation: graded degree-0
/// families commuting with both S and T, as unknowns minus the rank of
/// the stacked constraint matrix.
std::int64_t hom_pi(const PiModule& x, const PiModule& y);

/// Minimum of hom_pi over cfg.samples independent draw pairs. Monotone
/// nonincreasing in cfg.samples; the two arguments always use distinct
/// draw indices, so the diagonal m == n still gets independent points.
std::int64_t generic_hom(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg);

/// Via hom_pi both ways and the symmetrized Euler form.
std::int64_t generic_ext1(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg);

/// Self-extension dimension with the SAME draw on both sides:
/// min over draws x of 2 hom_pi(x, x) - (d, d).
std::int64_t ext1_diagonal(const Multisegment& m, const SampleConfig& cfg);

/// generic_hom(m, n) - alpha_plus(m, n).
std::int64_t coker_coxeter(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg);

bool is_rigid_component(const Multisegment& m, const SampleConfig& cfg);
bool strongly_commute(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg);

/// Conjugation by a seeded random invertible graded family. hom_pi is
/// invariant under this on either argument; tests rely on that to justify
/// pinning S at the base point.
PiModule random_base_change(const PiModule& x, std::uint64_t seed);

/// Pointwise (dim Hom, dim Ext^1, dim Ext^2) from the three-term
/// presentation complex of the doubled quiver with the commutator
/// relation. A route independent of hom_pi: Hom is the kernel of the
/// arrow-commutator map, Ext^1 its middle cohomology, Ext^2 the final
/// cokernel (dual to Hom the other way around).
struct PiExtDims {
    std::int64_t hom;
    std::int64_t ext1;
    std::int64_t ext2;
};
PiExtDims pi_ext_dims(const PiModule& x, const PiModule& y);

}  // namespace msl
