#include "msl/fp_matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msl {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(__uint128_t(a) * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t acc = 1;
        a %= n;
        while (e) {
            if (e & 1) acc = mulmod(acc, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return acc;
    };
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t prime) {
    FpMatrix m(n, n, prime);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::random(std::size_t rows, std::size_t cols, std::uint64_t prime, SplitMix64& rng) {
    FpMatrix m(rows, cols, prime);
    for (std::size_t i = 0; i < rows * cols; ++i) m.data_[i] = rng.below(prime);
    return m;
}

FpMatrix FpMatrix::mul(const FpMatrix& rhs) const {
    FpMatrix out(rows_, rhs.cols_, bar_.p);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t f = at(i, k);
            if (f == 0) continue;
            const std::uint64_t* src = rhs.row(k);
            std::uint64_t* dst = out.row(i);
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                dst[j] = bar_.reduce(dst[j] + bar_.mul(f, src[j]));
        }
    }
    return out;
}

bool FpMatrix::is_zero() const {
    for (std::uint64_t v : data_)
        if (v != 0) return false;
    return true;
}

bool FpMatrix::operator==(const FpMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && bar_.p == rhs.bar_.p && data_ == rhs.data_;
}

std::vector<std::size_t> FpMatrix::echelonize(bool reduced) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        // Fixed pivot rule: first row with a nonzero entry in this column.
        std::size_t sel = pivot_row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row) {
            for (std::size_t j = col; j < cols_; ++j) {
                std::uint64_t tmp = at(pivot_row, j);
                data_[pivot_row * cols_ + j] = at(sel, j);
                data_[sel * cols_ + j] = tmp;
            }
        }
        std::uint64_t inv = bar_.inv(at(pivot_row, col));
        std::uint64_t* prow = row(pivot_row);
        for (std::size_t j = col; j < cols_; ++j) prow[j] = bar_.mul(prow[j], inv);

        const std::size_t lo = reduced ? 0 : pivot_row + 1;
        const std::int64_t n = static_cast<std::int64_t>(rows_);
        // Row updates are independent of one another, so the parallel
        // schedule cannot change the arithmetic.
#pragma omp parallel for schedule(dynamic, 8) if (rows_ >= 96 && cols_ >= 64)
        for (std::int64_t r = static_cast<std::int64_t>(lo); r < n; ++r) {
            auto ur = static_cast<std::size_t>(r);
            if (ur == pivot_row) continue;
            std::uint64_t f = at(ur, col);
            if (f == 0) continue;
            std::uint64_t nf = bar_.neg(f);
            std::uint64_t* dst = row(ur);
            for (std::size_t j = col; j < cols_; ++j)
                dst[j] = bar_.reduce(dst[j] + nf * prow[j]);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

std::size_t FpMatrix::rank() const {
    FpMatrix work = *this;
    return work.echelonize(false).size();
}

std::size_t FpMatrix::rank_reference() const {
    const std::uint64_t p = bar_.p;
    std::vector<std::vector<std::uint64_t>> a(rows_, std::vector<std::uint64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);

    auto powmod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return acc;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t sel = rank;
        while (sel < rows_ && a[sel][col] == 0) ++sel;
        if (sel == rows_) continue;
        std::swap(a[sel], a[rank]);
        std::uint64_t inv = powmod(a[rank][col], p - 2);
        for (std::size_t j = col; j < cols_; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            std::uint64_t f = a[r][col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                a[r][j] = (a[r][j] + (p - f) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

FpMatrix FpMatrix::right_nullspace() const {
    FpMatrix work = *this;
    std::vector<std::size_t> pivots = work.echelonize(true);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    FpMatrix basis(cols_ - pivots.size(), cols_, bar_.p);
    std::size_t out_row = 0;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(out_row, free_col, 1);
        for (std::size_t j = 0; j < pivots.size(); ++j)
            basis.set(out_row, pivots[j], bar_.neg(work.at(j, free_col)));
        ++out_row;
    }
    return basis;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    if (cols_ == 0) return FpMatrix(0, 0, bar_.p);
    FpMatrix aug(rows_, 2 * cols_, bar_.p);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    std::vector<std::size_t> pivots = aug.echelonize(true);
    // invertible iff every pivot lands in the left block
    if (pivots.size() != cols_ || pivots.back() != cols_ - 1) return std::nullopt;
    FpMatrix inv(rows_, cols_, bar_.p);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.set(i, j, aug.at(i, cols_ + j));
    return inv;
}

}  // namespace msl
