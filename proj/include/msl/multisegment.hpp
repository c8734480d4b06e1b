#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace msl {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integer interval [a,b] with a <= b.
struct Segment {
    int a;
    int b;

    Segment(int a_, int b_) : a(a_), b(b_) {
        if (a > b) throw std::invalid_argument("segment with a > b");
    }

    int length() const { return b - a + 1; }

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Canonical order: descending right endpoint, then descending left endpoint.
inline bool canonical_less(const Segment& x, const Segment& y) {
    if (x.b != y.b) return x.b > y.b;
    return x.a > y.a;
}

/// The linkage order: [a,b] precedes [c,d] iff a+1 <= c <= b+1 <= d.
inline bool precedes(const Segment& d1, const Segment& d2) {
    return d1.a + 1 <= d2.a && d2.a <= d1.b + 1 && d1.b + 1 <= d2.b;
}

inline bool unlinked(const Segment& d1, const Segment& d2) {
    return !precedes(d1, d2) && !precedes(d2, d1);
}

inline Segment shift(const Segment& d) { return Segment(d.a - 1, d.b - 1); }
inline Segment dual(const Segment& d) { return Segment(-d.b, -d.a); }

/// Finite multiset of segments, kept in canonical order. The empty
/// multisegment is a valid value and stands for the zero module.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs);

    /// Grammar: "[a,b]" terms joined by '+', decimal integers, optional
    /// whitespace between tokens; the empty (or all-blank) string parses
    /// to the empty multisegment. Throws ParseError on malformed input
    /// and on a > b.
    static Multisegment parse(const std::string& text);

    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    std::size_t size() const { return segs_.size(); }

    /// Canonical serialization, minimal whitespace: "[a,b]+[c,d]".
    std::string str() const;

    /// Multiset union.
    Multisegment operator+(const Multisegment& rhs) const;

    friend bool operator==(const Multisegment&, const Multisegment&) = default;

private:
    std::vector<Segment> segs_;
};

Multisegment shift(const Multisegment& m);
Multisegment dual(const Multisegment& m);

}  // namespace msl
