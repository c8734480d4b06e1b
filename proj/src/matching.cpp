#include "msl/matching.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

#include "msl/classify.hpp"

namespace msl {

MatchingInstance build_instance(const Multisegment& delta_source,
                                const Multisegment& gamma_source) {
    MatchingInstance inst;
    inst.delta = arranged_form(delta_source);
    inst.gamma = arranged_form(gamma_source);

    const int k = static_cast<int>(inst.delta.size());
    const int l = static_cast<int>(inst.gamma.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            if (precedes(inst.delta[i], inst.gamma[j])) inst.x_set.push_back({i, j});
            if (precedes(shift(inst.delta[i]), inst.gamma[j])) inst.y_set.push_back({i, j});
        }

    for (int yi = 0; yi < static_cast<int>(inst.y_set.size()); ++yi)
        for (int xi = 0; xi < static_cast<int>(inst.x_set.size()); ++xi) {
            const IndexPair& y = inst.y_set[yi];
            const IndexPair& x = inst.x_set[xi];
            const bool same_delta = y.i == x.i && precedes(inst.gamma[y.j], inst.gamma[x.j]);
            const bool same_gamma = y.j == x.j && precedes(inst.delta[x.i], inst.delta[y.i]);
            if (same_delta || same_gamma) inst.arrows.emplace_back(yi, xi);
        }
    return inst;
}

namespace {

// Hopcroft-Karp, left side = Y, right side = X.
class HopcroftKarp {
public:
    HopcroftKarp(int ny, int nx) : ny_(ny), nx_(nx), adj_(ny), pair_y_(ny, -1), pair_x_(nx, -1) {}

    void add_edge(int y, int x) { adj_[y].push_back(x); }

    int solve() {
        int matched = 0;
        while (bfs()) {
            for (int y = 0; y < ny_; ++y)
                if (pair_y_[y] < 0 && dfs(y)) ++matched;
        }
        return matched;
    }

    const std::vector<int>& pair_x() const { return pair_x_; }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::queue<int> q;
        dist_.assign(ny_, kInf);
        for (int y = 0; y < ny_; ++y)
            if (pair_y_[y] < 0) {
                dist_[y] = 0;
                q.push(y);
            }
        bool reachable = false;
        while (!q.empty()) {
            int y = q.front();
            q.pop();
            for (int x : adj_[y]) {
                int y2 = pair_x_[x];
                if (y2 < 0) {
                    reachable = true;
                } else if (dist_[y2] == kInf) {
                    dist_[y2] = dist_[y] + 1;
                    q.push(y2);
                }
            }
        }
        return reachable;
    }

    bool dfs(int y) {
        for (int x : adj_[y]) {
            int y2 = pair_x_[x];
            if (y2 < 0 || (dist_[y2] == dist_[y] + 1 && dfs(y2))) {
                pair_y_[y] = x;
                pair_x_[x] = y;
                return true;
            }
        }
        dist_[y] = kInf;
        return false;
    }

    int ny_, nx_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> pair_y_, pair_x_, dist_;
};

}  // namespace

BestMatching best_matching(const MatchingInstance& inst) {
    HopcroftKarp hk(static_cast<int>(inst.y_set.size()), static_cast<int>(inst.x_set.size()));
    for (auto& [yi, xi] : inst.arrows) hk.add_edge(yi, xi);
    BestMatching bm;
    bm.size = hk.solve();
    bm.y_for_x = hk.pair_x();
    return bm;
}

namespace {

void require_ladder_pair(const Multisegment& m, const Multisegment& n) {
    if (!is_ladder(m) && !is_ladder(n))
        throw std::invalid_argument("matching interpretation needs a ladder on one side");
}

}  // namespace

std::int64_t hom_via_matching(const Multisegment& m, const Multisegment& n) {
    require_ladder_pair(m, n);
    MatchingInstance inst = build_instance(n, m);
    BestMatching bm = best_matching(inst);
    return static_cast<std::int64_t>(inst.y_set.size()) - bm.size;
}

std::int64_t coker_via_matching(const Multisegment& m, const Multisegment& n) {
    require_ladder_pair(m, n);
    MatchingInstance inst = build_instance(n, m);
    BestMatching bm = best_matching(inst);
    return static_cast<std::int64_t>(inst.x_set.size()) - bm.size;
}

std::string to_diagnostic_string(const MatchingInstance& inst, const BestMatching& bm) {
    auto seg = [](const Segment& s) {
        return "[" + std::to_string(s.a) + "," + std::to_string(s.b) + "]";
    };
    auto pair1 = [](const IndexPair& p) {
        return "(" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
    };
    std::string out = "Delta:";
    for (const Segment& s : inst.delta) out += " " + seg(s);
    out += "\nGamma:";
    for (const Segment& s : inst.gamma) out += " " + seg(s);
    out += "\nX:";
    for (const IndexPair& p : inst.x_set) out += " " + pair1(p);
    out += "\nY:";
    for (const IndexPair& p : inst.y_set) out += " " + pair1(p);
    out += "\narrows:";
    for (auto& [yi, xi] : inst.arrows)
        out += " " + pair1(inst.y_set[yi]) + "~>" + pair1(inst.x_set[xi]);
    out += "\nmatching (|I| = " + std::to_string(bm.size) + "):";
    for (std::size_t xi = 0; xi < bm.y_for_x.size(); ++xi)
        if (bm.y_for_x[xi] >= 0)
            out += " " + pair1(inst.y_set[bm.y_for_x[xi]]) + "->" + pair1(inst.x_set[xi]);
    out += "\n";
    return out;
}

}  // namespace msl
