#include "msl/pi_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace msl {

void SampleConfig::validate() const {
    if (prime <= 1000000ULL || prime >= (1ULL << 32))
        throw std::invalid_argument("prime must lie in (10^6, 2^32)");
    if (!is_prime_u64(prime)) throw std::invalid_argument("modulus is not prime");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
}

namespace {

std::size_t dim_at(const DimVector& d, int i) {
    return static_cast<std::size_t>(d.at(i));
}

// Matrix of a map family at coordinate i, materializing zeros when absent.
FpMatrix map_or_zero(const std::map<int, FpMatrix>& maps, int i, std::size_t rows,
                     std::size_t cols, std::uint64_t prime) {
    auto it = maps.find(i);
    if (it != maps.end()) return it->second;
    return FpMatrix(rows, cols, prime);
}

}  // namespace

bool moment_map_holds(const PiModule& x) {
    if (x.dims.is_zero()) return true;
    const int lo = x.dims.min_coord() - 1;
    const int hi = x.dims.max_coord() + 1;
    for (int i = lo; i <= hi; ++i) {
        const std::size_t di = dim_at(x.dims, i);
        if (di == 0) continue;
        FpMatrix lhs(di, di, x.prime);
        FpMatrix rhs(di, di, x.prime);
        if (dim_at(x.dims, i + 1) > 0) {
            FpMatrix s = map_or_zero(x.S, i, dim_at(x.dims, i + 1), di, x.prime);
            FpMatrix t = map_or_zero(x.T, i + 1, di, dim_at(x.dims, i + 1), x.prime);
            lhs = t.mul(s);
        }
        if (dim_at(x.dims, i - 1) > 0) {
            FpMatrix t = map_or_zero(x.T, i, dim_at(x.dims, i - 1), di, x.prime);
            FpMatrix s = map_or_zero(x.S, i - 1, di, dim_at(x.dims, i - 1), x.prime);
            rhs = s.mul(t);
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

FiberSampler::FiberSampler(const Multisegment& m, std::uint64_t prime)
    : dims_(grdim(m)), basis_(0, 0, prime), prime_(prime) {
    s_maps_ = mu_plus(m, prime).maps;

    for (auto& [i, di] : dims_.entries()) {
        const std::size_t prev = dim_at(dims_, i - 1);
        if (prev == 0) continue;
        t_blocks_.push_back({i, prev, static_cast<std::size_t>(di), t_unknowns_});
        t_unknowns_ += prev * static_cast<std::size_t>(di);
    }

    // Relation rows: for each coordinate i, the d_i x d_i equation
    // T_{i+1} S_i - S_{i-1} T_i = 0, linear in the T entries.
    auto block_of = [&](int coord) -> const TBlock* {
        for (const TBlock& b : t_blocks_)
            if (b.coord == coord) return &b;
        return nullptr;
    };

    std::size_t rows = 0;
    for (auto& [i, di] : dims_.entries())
        if (block_of(i + 1) || block_of(i)) rows += static_cast<std::size_t>(di) * di;

    FpMatrix constraints(rows, t_unknowns_, prime);
    std::size_t row0 = 0;
    for (auto& [i, di_raw] : dims_.entries()) {
        const std::size_t di = static_cast<std::size_t>(di_raw);
        const TBlock* tb_up = block_of(i + 1);  // T_{i+1}: d_i x d_{i+1}
        const TBlock* tb_dn = block_of(i);      // T_i: d_{i-1} x d_i
        if (!tb_up && !tb_dn) continue;
        // Row (r, c) of the equation, r and c in [0, d_i).
        if (tb_up) {
            auto s_it = s_maps_.find(i);  // S_i: d_{i+1} x d_i
            if (s_it != s_maps_.end()) {
                const FpMatrix& s = s_it->second;
                for (std::size_t r = 0; r < di; ++r)
                    for (std::size_t c = 0; c < di; ++c)
                        for (std::size_t k = 0; k < tb_up->cols; ++k) {
                            std::uint64_t coef = s.at(k, c);
                            if (coef)
                                constraints.set(row0 + r * di + c,
                                                tb_up->offset + r * tb_up->cols + k, coef);
                        }
            }
        }
        if (tb_dn) {
            auto s_it = s_maps_.find(i - 1);  // S_{i-1}: d_i x d_{i-1}
            if (s_it != s_maps_.end()) {
                const FpMatrix& s = s_it->second;
                const Barrett& f = constraints.field();
                for (std::size_t r = 0; r < di; ++r)
                    for (std::size_t c = 0; c < di; ++c)
                        for (std::size_t k = 0; k < tb_dn->rows; ++k) {
                            std::uint64_t coef = s.at(r, k);
                            if (coef) {
                                std::size_t col = tb_dn->offset + k * tb_dn->cols + c;
                                std::size_t row = row0 + r * di + c;
                                constraints.set(row, col,
                                                f.sub(constraints.at(row, col), coef));
                            }
                        }
            }
        }
        row0 += di * di;
    }
    basis_ = constraints.right_nullspace();
}

PiModule FiberSampler::draw(std::uint64_t seed, std::uint64_t draw_index) const {
    SplitMix64 rng(mix_seed(seed, draw_index));
    const Barrett& f = basis_.field();

    std::vector<std::uint64_t> t_vec(t_unknowns_, 0);
    for (std::size_t k = 0; k < basis_.rows(); ++k) {
        std::uint64_t c = rng.below(prime_);
        if (c == 0) continue;
        const std::uint64_t* brow = basis_.row(k);
        for (std::size_t j = 0; j < t_unknowns_; ++j)
            if (brow[j]) t_vec[j] = f.reduce(t_vec[j] + c * brow[j]);
    }

    PiModule x;
    x.dims = dims_;
    x.S = s_maps_;
    x.prime = prime_;
    for (const TBlock& b : t_blocks_) {
        FpMatrix t(b.rows, b.cols, prime_);
        for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c)
                t.set(r, c, t_vec[b.offset + r * b.cols + c]);
        x.T.emplace(b.coord, std::move(t));
    }
    return x;
}

PiModule generic_point(const Multisegment& m, const SampleConfig& cfg, std::uint64_t draw_index) {
    cfg.validate();
    return FiberSampler(m, cfg.prime).draw(cfg.seed, draw_index);
}

std::int64_t hom_pi(const PiModule& x, const PiModule& y) {
    if (x.prime != y.prime) throw std::invalid_argument("hom_pi: mismatched moduli");
    const std::uint64_t p = x.prime;

    // Unknowns: phi_i of shape e_i x d_i wherever both sides live.
    struct Block {
        int coord;
        std::size_t rows, cols, offset;
    };
    std::vector<Block> blocks;
    std::size_t unknowns = 0;
    for (auto& [i, di] : x.dims.entries()) {
        const std::size_t ei = dim_at(y.dims, i);
        if (ei == 0) continue;
        blocks.push_back({i, ei, static_cast<std::size_t>(di), unknowns});
        unknowns += ei * static_cast<std::size_t>(di);
    }
    if (unknowns == 0) return 0;
    auto block_of = [&](int coord) -> const Block* {
        for (const Block& b : blocks)
            if (b.coord == coord) return &b;
        return nullptr;
    };

    // Constraint rows: phi_{i+1} S^x_i = S^y_i phi_i in Hom(x_i, y_{i+1}),
    // and phi_{i-1} T^x_i = T^y_i phi_i in Hom(x_i, y_{i-1}).
    std::size_t rows = 0;
    for (auto& [i, di] : x.dims.entries()) {
        if (dim_at(y.dims, i + 1) > 0) rows += static_cast<std::size_t>(di) * dim_at(y.dims, i + 1);
        if (dim_at(y.dims, i - 1) > 0) rows += static_cast<std::size_t>(di) * dim_at(y.dims, i - 1);
    }

    FpMatrix cm(rows, unknowns, p);
    const Barrett& f = cm.field();
    std::size_t row0 = 0;

    auto add_term = [&](std::size_t row, std::size_t col, std::uint64_t coef, bool negate) {
        if (coef == 0) return;
        cm.set(row, col, negate ? f.sub(cm.at(row, col), coef) : f.add(cm.at(row, col), coef));
    };

    for (auto& [i, di_raw] : x.dims.entries()) {
        const std::size_t di = static_cast<std::size_t>(di_raw);
        for (int step : {+1, -1}) {
            const std::size_t ej = dim_at(y.dims, i + step);
            if (ej == 0) continue;
            const auto& x_maps = step == +1 ? x.S : x.T;
            const auto& y_maps = step == +1 ? y.S : y.T;
            // term phi_{i+step} * M^x_i, with phi_{i+step}: ej x d_{i+step}
            if (const Block* bu = block_of(i + step)) {
                auto mx = x_maps.find(i);  // M^x_i: d_{i+step} x d_i
                if (mx != x_maps.end()) {
                    for (std::size_t r = 0; r < ej; ++r)
                        for (std::size_t c = 0; c < di; ++c)
                            for (std::size_t k = 0; k < bu->cols; ++k)
                                add_term(row0 + r * di + c, bu->offset + r * bu->cols + k,
                                         mx->second.at(k, c), false);
                }
            }
            // term -M^y_i * phi_i, with phi_i: e_i x d_i
            if (const Block* bi = block_of(i)) {
                auto my = y_maps.find(i);  // M^y_i: e_{i+step} x e_i
                if (my != y_maps.end()) {
                    for (std::size_t r = 0; r < ej; ++r)
                        for (std::size_t c = 0; c < di; ++c)
                            for (std::size_t k = 0; k < bi->rows; ++k)
                                add_term(row0 + r * di + c, bi->offset + k * bi->cols + c,
                                         my->second.at(r, k), true);
                }
            }
            row0 += ej * di;
        }
    }

    return static_cast<std::int64_t>(unknowns) - static_cast<std::int64_t>(cm.rank());
}

std::int64_t generic_hom(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg) {
    cfg.validate();
    if (m.empty() || n.empty()) return 0;
    FiberSampler sm(m, cfg.prime);
    FiberSampler sn(n, cfg.prime);

    std::int64_t best = -1;
#pragma omp parallel for schedule(dynamic) if (cfg.samples > 1)
    for (int k = 0; k < cfg.samples; ++k) {
        PiModule x = sm.draw(cfg.seed, 2 * static_cast<std::uint64_t>(k));
        PiModule y = sn.draw(cfg.seed, 2 * static_cast<std::uint64_t>(k) + 1);
        std::int64_t h = hom_pi(x, y);
#pragma omp critical(msl_generic_hom_min)
        {
            if (best < 0 || h < best) best = h;
        }
    }
    return best;
}

std::int64_t generic_ext1(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg) {
    return generic_hom(m, n, cfg) + generic_hom(n, m, cfg) - sym_form(grdim(m), grdim(n));
}

std::int64_t ext1_diagonal(const Multisegment& m, const SampleConfig& cfg) {
    cfg.validate();
    if (m.empty()) return 0;
    FiberSampler sm(m, cfg.prime);
    const std::int64_t q = sym_form(grdim(m), grdim(m));

    std::int64_t best = -1;
#pragma omp parallel for schedule(dynamic) if (cfg.samples > 1)
    for (int k = 0; k < cfg.samples; ++k) {
        PiModule x = sm.draw(cfg.seed, static_cast<std::uint64_t>(k));
        std::int64_t e = 2 * hom_pi(x, x) - q;
#pragma omp critical(msl_ext_diag_min)
        {
            if (best < 0 || e < best) best = e;
        }
    }
    return best;
}

std::int64_t coker_coxeter(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg) {
    return generic_hom(m, n, cfg) - alpha_plus(m, n);
}

bool is_rigid_component(const Multisegment& m, const SampleConfig& cfg) {
    return ext1_diagonal(m, cfg) == 0;
}

bool strongly_commute(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg) {
    return generic_ext1(m, n, cfg) == 0;
}

PiExtDims pi_ext_dims(const PiModule& x, const PiModule& y) {
    if (x.prime != y.prime) throw std::invalid_argument("pi_ext_dims: mismatched moduli");
    const std::uint64_t p = x.prime;

    struct Block {
        int coord;
        int arrow;  // 0: vertex term, +1: ascending arrow, -1: descending arrow
        std::size_t rows, cols, offset;
    };
    auto find_block = [](const std::vector<Block>& blocks, int coord, int arrow) -> const Block* {
        for (const Block& b : blocks)
            if (b.coord == coord && b.arrow == arrow) return &b;
        return nullptr;
    };

    // C0 and C2: one phi_i per shared vertex. C1: one psi per arrow out of
    // a populated x-vertex into a populated y-target.
    std::vector<Block> c0, c1;
    std::size_t c0_total = 0, c1_total = 0;
    for (auto& [i, di_raw] : x.dims.entries()) {
        const std::size_t di = static_cast<std::size_t>(di_raw);
        const std::size_t ei = dim_at(y.dims, i);
        if (ei > 0) {
            c0.push_back({i, 0, ei, di, c0_total});
            c0_total += ei * di;
        }
        for (int step : {+1, -1}) {
            const std::size_t ej = dim_at(y.dims, i + step);
            if (ej > 0) {
                c1.push_back({i, step, ej, di, c1_total});
                c1_total += ej * di;
            }
        }
    }

    auto entry_of = [](const std::map<int, FpMatrix>& maps, int i, std::size_t r, std::size_t c) {
        auto it = maps.find(i);
        return it == maps.end() ? std::uint64_t(0) : it->second.at(r, c);
    };

    // d0: C0 -> C1, phi |-> (M^y_a phi_s - phi_t M^x_a) per arrow a.
    FpMatrix d0(c1_total, c0_total, p);
    {
        const Barrett& f = d0.field();
        for (const Block& out : c1) {
            const int i = out.coord, step = out.arrow;
            const auto& x_maps = step == +1 ? x.S : x.T;
            const auto& y_maps = step == +1 ? y.S : y.T;
            if (const Block* src = find_block(c0, i, 0)) {
                for (std::size_t r = 0; r < out.rows; ++r)
                    for (std::size_t c = 0; c < out.cols; ++c)
                        for (std::size_t k = 0; k < src->rows; ++k) {
                            std::uint64_t coef = entry_of(y_maps, i, r, k);
                            if (!coef) continue;
                            std::size_t row = out.offset + r * out.cols + c;
                            std::size_t col = src->offset + k * src->cols + c;
                            d0.set(row, col, f.add(d0.at(row, col), coef));
                        }
            }
            if (const Block* tgt = find_block(c0, i + step, 0)) {
                for (std::size_t r = 0; r < out.rows; ++r)
                    for (std::size_t c = 0; c < out.cols; ++c)
                        for (std::size_t k = 0; k < tgt->cols; ++k) {
                            std::uint64_t coef = entry_of(x.S, i, k, c);
                            if (step == -1) coef = entry_of(x.T, i, k, c);
                            if (!coef) continue;
                            std::size_t row = out.offset + r * out.cols + c;
                            std::size_t col = tgt->offset + r * tgt->cols + k;
                            d0.set(row, col, f.sub(d0.at(row, col), coef));
                        }
            }
        }
    }

    // d1: C1 -> C2, differentiating the vertex relation
    // f_{i+1} e_i - e_{i-1} f_i:
    // d1(psi)_i = T^y_{i+1} psi^e_i + psi^f_{i+1} S^x_i
    //           - S^y_{i-1} psi^f_i - psi^e_{i-1} T^x_i.
    FpMatrix d1(c0_total, c1_total, p);
    {
        const Barrett& f = d1.field();
        auto post_compose = [&](const Block& out, const Block& src,
                                const std::map<int, FpMatrix>& maps, int at, bool negate) {
            // out gets M * psi_src with M = maps[at]: y_{src target} -> y_out
            for (std::size_t r = 0; r < out.rows; ++r)
                for (std::size_t c = 0; c < out.cols; ++c)
                    for (std::size_t k = 0; k < src.rows; ++k) {
                        std::uint64_t coef = entry_of(maps, at, r, k);
                        if (!coef) continue;
                        std::size_t row = out.offset + r * out.cols + c;
                        std::size_t col = src.offset + k * src.cols + c;
                        d1.set(row, col,
                               negate ? f.sub(d1.at(row, col), coef)
                                      : f.add(d1.at(row, col), coef));
                    }
        };
        auto pre_compose = [&](const Block& out, const Block& src,
                               const std::map<int, FpMatrix>& maps, int at, bool negate) {
            // out gets psi_src * M with M = maps[at]: x_out -> x_{src source}
            for (std::size_t r = 0; r < out.rows; ++r)
                for (std::size_t c = 0; c < out.cols; ++c)
                    for (std::size_t k = 0; k < src.cols; ++k) {
                        std::uint64_t coef = entry_of(maps, at, k, c);
                        if (!coef) continue;
                        std::size_t row = out.offset + r * out.cols + c;
                        std::size_t col = src.offset + r * src.cols + k;
                        d1.set(row, col,
                               negate ? f.sub(d1.at(row, col), coef)
                                      : f.add(d1.at(row, col), coef));
                    }
        };
        for (const Block& out : c0) {
            const int i = out.coord;
            if (const Block* s = find_block(c1, i, +1)) post_compose(out, *s, y.T, i + 1, false);
            if (const Block* s = find_block(c1, i + 1, -1)) pre_compose(out, *s, x.S, i, false);
            if (const Block* s = find_block(c1, i, -1)) post_compose(out, *s, y.S, i - 1, true);
            if (const Block* s = find_block(c1, i - 1, +1)) pre_compose(out, *s, x.T, i, true);
        }
    }

    const std::int64_t r0 = static_cast<std::int64_t>(d0.rank());
    const std::int64_t r1 = static_cast<std::int64_t>(d1.rank());
    const std::int64_t c0n = static_cast<std::int64_t>(c0_total);
    const std::int64_t c1n = static_cast<std::int64_t>(c1_total);
    return {c0n - r0, c1n - r1 - r0, c0n - r1};
}

PiModule random_base_change(const PiModule& x, std::uint64_t seed) {
    SplitMix64 rng(mix_seed(seed, 0x9c0ffee1ULL));
    std::map<int, FpMatrix> g, ginv;
    for (auto& [i, di_raw] : x.dims.entries()) {
        const std::size_t n = static_cast<std::size_t>(di_raw);
        for (;;) {
            FpMatrix cand = FpMatrix::random(n, n, x.prime, rng);
            if (auto inv = cand.inverse()) {
                g.emplace(i, std::move(cand));
                ginv.emplace(i, std::move(*inv));
                break;
            }
        }
    }
    PiModule out;
    out.dims = x.dims;
    out.prime = x.prime;
    for (auto& [i, s] : x.S) out.S.emplace(i, g.at(i + 1).mul(s).mul(ginv.at(i)));
    for (auto& [i, t] : x.T) out.T.emplace(i, g.at(i - 1).mul(t).mul(ginv.at(i)));
    return out;
}

}  // namespace msl
