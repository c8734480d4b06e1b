#include "msl/dim_vector.hpp"

namespace msl {

DimVector grdim(const Multisegment& m) {
    DimVector d;
    for (const Segment& s : m.segments())
        for (int i = s.a; i <= s.b; ++i) d.add(i, 1);
    return d;
}

std::int64_t euler_plus(const DimVector& d, const DimVector& e) {
    std::int64_t acc = 0;
    for (auto& [i, v] : d.entries()) acc += v * (e.at(i) - e.at(i + 1));
    return acc;
}

std::int64_t sym_form(const DimVector& d, const DimVector& e) {
    return euler_plus(d, e) + euler_plus(e, d);
}

}  // namespace msl
