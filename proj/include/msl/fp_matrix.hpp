#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "msl/fp.hpp"

namespace msl {

/// Dense matrix over F_p, p prime, p < 2^32. Entries stored reduced mod p.
///
/// rank() and right_nullspace() use a fixed deterministic pivot rule
/// (first nonzero row per column), so results are identical whether the
/// row-elimination loop runs serially or under OpenMP.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t prime)
        : rows_(rows), cols_(cols), bar_(prime), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t prime() const { return bar_.p; }
    const Barrett& field() const { return bar_; }

    std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = v % bar_.p; }

    std::uint64_t* row(std::size_t r) { return data_.data() + r * cols_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * cols_; }

    static FpMatrix identity(std::size_t n, std::uint64_t prime);
    static FpMatrix random(std::size_t rows, std::size_t cols, std::uint64_t prime, SplitMix64& rng);

    FpMatrix mul(const FpMatrix& rhs) const;
    bool is_zero() const;
    bool operator==(const FpMatrix& rhs) const;

    /// Rank by Gaussian elimination; parallelizes row updates when profitable.
    std::size_t rank() const;

    /// Plain serial elimination with % arithmetic. Reference implementation
    /// kept for testing and benchmarking against rank().
    std::size_t rank_reference() const;

    /// Basis of {x : A x = 0}, one vector per row. Row count equals
    /// cols() - rank(). Deterministic (RREF with the fixed pivot rule).
    FpMatrix right_nullspace() const;

    std::optional<FpMatrix> inverse() const;

private:
    // In-place elimination; returns pivot columns. reduced selects RREF.
    std::vector<std::size_t> echelonize(bool reduced);

    std::size_t rows_, cols_;
    Barrett bar_;
    std::vector<std::uint64_t> data_;
};

}  // namespace msl
