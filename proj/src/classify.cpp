#include "msl/classify.hpp"

#include <set>
#include <stdexcept>

namespace msl {

std::vector<Segment> arranged_form(const Multisegment& m) { return m.segments(); }

bool is_ladder(const Multisegment& m) {
    const auto& s = m.segments();
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (!(s[i].a > s[i + 1].a && s[i].b > s[i + 1].b)) return false;
    return true;
}

bool is_speh(const Multisegment& m) {
    const auto& s = m.segments();
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i + 1] != shift(s[i])) return false;
    return true;
}

bool is_regular(const Multisegment& m) {
    std::set<int> as, bs;
    for (const Segment& s : m.segments()) {
        if (!as.insert(s.a).second) return false;
        if (!bs.insert(s.b).second) return false;
    }
    return true;
}

std::string to_string(PatternWitness::Kind k) {
    return k == PatternWitness::Kind::type4231 ? "4231" : "3412";
}

bool witness_valid(const PatternWitness& w) {
    const auto& d = w.ordered;
    const std::size_t k = d.size();
    if (k < 4) return false;
    if (w.kind == PatternWitness::Kind::type4231) {
        for (std::size_t i = 2; i < k; ++i)
            if (!precedes(d[i], d[i - 1])) return false;
        return d[k - 1].a < d[0].a && d[0].a < d[k - 2].a &&
               d[2].b < d[0].b && d[0].b < d[1].b;
    }
    for (std::size_t i = 3; i < k; ++i)
        if (!precedes(d[i], d[i - 1])) return false;
    if (!precedes(d[1], d[0])) return false;
    return d[1].a < d[k - 1].a && d[k - 1].a < d[0].a && d[0].a < d[k - 2].a &&
           d[3].b < d[1].b && d[1].b < d[2].b && d[2].b < d[0].b;
}

namespace {

// Chains u_1 < u_2 < ... < u_r in the precedence order, enumerated by DFS.
// A chain of length r plays (Delta_k, ..., Delta_2) for type 4231 and
// (Delta_k, ..., Delta_3) for type 3412; the remaining conditions only
// involve the chain ends and the extra one or two segments.
struct PatternSearch {
    const std::vector<Segment>& segs;
    std::vector<std::size_t> chain;
    std::vector<bool> used;
    std::optional<PatternWitness> found;

    explicit PatternSearch(const std::vector<Segment>& s) : segs(s), used(s.size(), false) {}

    const Segment& seg(std::size_t idx) const { return segs[idx]; }

    std::vector<Segment> chain_reversed_with_prefix(std::vector<Segment> prefix) const {
        for (std::size_t t = chain.size(); t-- > 0;) prefix.push_back(seg(chain[t]));
        return prefix;
    }

    bool try_complete_4231() {
        if (chain.size() < 3) return false;
        const Segment& u1 = seg(chain.front());
        const Segment& u2 = seg(chain[1]);
        const Segment& ur = seg(chain.back());
        const Segment& ur1 = seg(chain[chain.size() - 2]);
        for (std::size_t x = 0; x < segs.size(); ++x) {
            if (used[x]) continue;
            const Segment& d1 = seg(x);
            if (u1.a < d1.a && d1.a < u2.a && ur1.b < d1.b && d1.b < ur.b) {
                found = PatternWitness{PatternWitness::Kind::type4231,
                                       chain_reversed_with_prefix({d1})};
                return true;
            }
        }
        return false;
    }

    // The crossing pair straddles the chain: Delta_2 starts below it and
    // ends between its top two members, Delta_1 starts between its bottom
    // two members and ends above it, with Delta_2 preceding Delta_1.
    bool try_complete_3412() {
        if (chain.size() < 2) return false;
        const Segment& u1 = seg(chain.front());
        const Segment& u2 = seg(chain[1]);
        const Segment& ur = seg(chain.back());
        const Segment& ur1 = seg(chain[chain.size() - 2]);
        for (std::size_t x = 0; x < segs.size(); ++x) {
            if (used[x]) continue;
            const Segment& d1 = seg(x);
            if (!(u1.a < d1.a && d1.a < u2.a)) continue;
            if (!(ur.b < d1.b)) continue;
            for (std::size_t y = 0; y < segs.size(); ++y) {
                if (used[y] || y == x) continue;
                const Segment& d2 = seg(y);
                if (precedes(d2, d1) && d2.a < u1.a && ur1.b < d2.b && d2.b < ur.b) {
                    found = PatternWitness{PatternWitness::Kind::type3412,
                                           chain_reversed_with_prefix({d1, d2})};
                    return true;
                }
            }
        }
        return false;
    }

    bool extend() {
        if (try_complete_4231() || try_complete_3412()) return true;
        const Segment& last = seg(chain.back());
        for (std::size_t j = 0; j < segs.size(); ++j) {
            if (used[j] || !precedes(last, seg(j))) continue;
            used[j] = true;
            chain.push_back(j);
            if (extend()) return true;
            chain.pop_back();
            used[j] = false;
        }
        return false;
    }

    std::optional<PatternWitness> run() {
        for (std::size_t i = 0; i < segs.size(); ++i) {
            used[i] = true;
            chain.assign(1, i);
            if (extend()) return found;
            used[i] = false;
        }
        return std::nullopt;
    }
};

}  // namespace

BalancedResult is_balanced(const Multisegment& m) {
    if (!is_regular(m))
        throw std::invalid_argument("is_balanced requires a regular multisegment");
    if (m.size() < 4) return {true, std::nullopt};
    PatternSearch search(m.segments());
    if (auto w = search.run()) return {false, std::move(w)};
    return {true, std::nullopt};
}

}  // namespace msl
