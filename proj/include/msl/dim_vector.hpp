#pragma once

#include <cstdint>
#include <map>

#include "msl/multisegment.hpp"

namespace msl {

/// Finitely supported map Z -> N. Stored entries are strictly positive;
/// absent coordinates read as 0.
class DimVector {
public:
    DimVector() = default;

    std::int64_t at(int i) const {
        auto it = entries_.find(i);
        return it == entries_.end() ? 0 : it->second;
    }

    void add(int i, std::int64_t v) {
        if (v == 0) return;
        auto [it, inserted] = entries_.try_emplace(i, 0);
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }

    const std::map<int, std::int64_t>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto& [i, v] : entries_) s += v;
        return s;
    }

    /// Coordinate support bounds; only valid when nonzero.
    int min_coord() const { return entries_.begin()->first; }
    int max_coord() const { return entries_.rbegin()->first; }

    /// Entry at i becomes entry at -i.
    DimVector reflected() const {
        DimVector out;
        for (auto& [i, v] : entries_) out.add(-i, v);
        return out;
    }

    DimVector& operator+=(const DimVector& rhs) {
        for (auto& [i, v] : rhs.entries_) add(i, v);
        return *this;
    }

    friend bool operator==(const DimVector&, const DimVector&) = default;

private:
    std::map<int, std::int64_t> entries_;
};

/// Coordinate multiplicities: entry at i counts the segments covering i.
DimVector grdim(const Multisegment& m);

/// Directed Euler pairing of the ascending orientation:
/// <d,e>_+ = sum_i d_i e_i - d_i e_{i+1}.
std::int64_t euler_plus(const DimVector& d, const DimVector& e);

/// Symmetrized form (d,e) = <d,e>_+ + <e,d>_+.
std::int64_t sym_form(const DimVector& d, const DimVector& e);

}  // namespace msl
