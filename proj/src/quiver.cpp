#include "msl/quiver.hpp"

namespace msl {

namespace {

QuiverRep make_interval_sum(const Multisegment& m, QuiverDir dir, std::uint64_t prime) {
    QuiverRep rep{dir, grdim(m), {}, prime};
    const int step = dir == QuiverDir::plus ? 1 : -1;

    for (auto& [i, di] : rep.dims.entries()) {
        std::int64_t dj = rep.dims.at(i + step);
        if (dj > 0)
            rep.maps.emplace(i, FpMatrix(static_cast<std::size_t>(dj),
                                         static_cast<std::size_t>(di), prime));
    }

    // Block slot per segment and coordinate, in canonical segment order.
    DimVector seen;
    for (const Segment& s : m.segments()) {
        std::map<int, std::size_t> slot;
        for (int i = s.a; i <= s.b; ++i) {
            slot[i] = static_cast<std::size_t>(seen.at(i));
            seen.add(i, 1);
        }
        if (dir == QuiverDir::plus) {
            for (int i = s.a; i < s.b; ++i) rep.maps.at(i).set(slot[i + 1], slot[i], 1);
        } else {
            for (int i = s.a + 1; i <= s.b; ++i) rep.maps.at(i).set(slot[i - 1], slot[i], 1);
        }
    }
    return rep;
}

}  // namespace

QuiverRep mu_plus(const Multisegment& m, std::uint64_t prime) {
    return make_interval_sum(m, QuiverDir::plus, prime);
}

QuiverRep mu_minus(const Multisegment& m, std::uint64_t prime) {
    return make_interval_sum(m, QuiverDir::minus, prime);
}

int hom_qplus_segments(const Segment& d, const Segment& g) {
    return precedes(shift(g), d) ? 1 : 0;
}

int ext1_qplus_segments(const Segment& d, const Segment& g) {
    return precedes(d, g) ? 1 : 0;
}

std::int64_t hom_qplus(const Multisegment& x, const Multisegment& y) {
    std::int64_t acc = 0;
    for (const Segment& d : x.segments())
        for (const Segment& g : y.segments()) acc += hom_qplus_segments(d, g);
    return acc;
}

std::int64_t ext1_qplus(const Multisegment& x, const Multisegment& y) {
    std::int64_t acc = 0;
    for (const Segment& d : x.segments())
        for (const Segment& g : y.segments()) acc += ext1_qplus_segments(d, g);
    return acc;
}

std::int64_t alpha_plus(const Multisegment& m, const Multisegment& n) {
    return hom_qplus(m, n) - ext1_qplus(n, m);
}

int alpha_plus_segment_pair(const Segment& d, const Segment& g) {
    return hom_qplus_segments(d, g) - ext1_qplus_segments(g, d);
}

std::int64_t alpha(const Multisegment& m, const Multisegment& n) {
    return -sym_form(grdim(m), grdim(n));
}

std::pair<std::int64_t, std::int64_t> hom_ext_qrep(const QuiverRep& x, const QuiverRep& y) {
    if (x.dir != y.dir) throw std::invalid_argument("hom_ext_qrep: orientation mismatch");
    if (x.prime != y.prime) throw std::invalid_argument("hom_ext_qrep: modulus mismatch");
    const int step = x.dir == QuiverDir::plus ? 1 : -1;

    struct Block {
        int coord;
        std::size_t rows, cols, offset;
    };
    auto layout = [](const DimVector& d, const DimVector& e, int shift_by) {
        std::vector<Block> blocks;
        std::size_t total = 0;
        for (auto& [i, di] : d.entries()) {
            std::size_t ei = static_cast<std::size_t>(e.at(i + shift_by));
            if (ei == 0) continue;
            blocks.push_back({i, ei, static_cast<std::size_t>(di), total});
            total += ei * static_cast<std::size_t>(di);
        }
        return std::pair(blocks, total);
    };

    auto [dom_blocks, dom_total] = layout(x.dims, y.dims, 0);      // phi_i: e_i x d_i
    auto [img_blocks, img_total] = layout(x.dims, y.dims, step);   // values in Hom(x_i, y_{i+step})

    auto dom_of = [&](int coord) -> const Block* {
        for (const Block& b : dom_blocks)
            if (b.coord == coord) return &b;
        return nullptr;
    };

    FpMatrix d_mat(img_total, dom_total, x.prime);
    const Barrett& f = d_mat.field();
    for (const Block& img : img_blocks) {
        const int i = img.coord;
        // M^y_i phi_i
        if (const Block* bi = dom_of(i)) {
            auto my = y.maps.find(i);
            if (my != y.maps.end())
                for (std::size_t r = 0; r < img.rows; ++r)
                    for (std::size_t c = 0; c < img.cols; ++c)
                        for (std::size_t k = 0; k < bi->rows; ++k) {
                            std::uint64_t coef = my->second.at(r, k);
                            if (!coef) continue;
                            std::size_t row = img.offset + r * img.cols + c;
                            std::size_t col = bi->offset + k * bi->cols + c;
                            d_mat.set(row, col, f.add(d_mat.at(row, col), coef));
                        }
        }
        // -phi_{i+step} M^x_i
        if (const Block* bu = dom_of(i + step)) {
            auto mx = x.maps.find(i);
            if (mx != x.maps.end())
                for (std::size_t r = 0; r < img.rows; ++r)
                    for (std::size_t c = 0; c < img.cols; ++c)
                        for (std::size_t k = 0; k < bu->cols; ++k) {
                            std::uint64_t coef = mx->second.at(k, c);
                            if (!coef) continue;
                            std::size_t row = img.offset + r * img.cols + c;
                            std::size_t col = bu->offset + r * bu->cols + k;
                            d_mat.set(row, col, f.sub(d_mat.at(row, col), coef));
                        }
        }
    }

    const std::int64_t rank = static_cast<std::int64_t>(d_mat.rank());
    return {static_cast<std::int64_t>(dom_total) - rank,
            static_cast<std::int64_t>(img_total) - rank};
}

}  // namespace msl
