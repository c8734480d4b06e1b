#include "msl/multisegment.hpp"

#include <algorithm>
#include <cctype>

namespace msl {

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
    std::sort(segs_.begin(), segs_.end(), canonical_less);
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos));
        ++pos;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits)
            throw ParseError("expected integer at position " + std::to_string(start));
        try {
            return std::stoi(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range at position " + std::to_string(start));
        }
    }
};

}  // namespace

Multisegment Multisegment::parse(const std::string& text) {
    Cursor cur{text};
    std::vector<Segment> segs;
    if (cur.done()) return Multisegment();
    for (;;) {
        cur.expect('[');
        int a = cur.integer();
        cur.expect(',');
        int b = cur.integer();
        cur.expect(']');
        if (a > b)
            throw ParseError("segment [" + std::to_string(a) + "," + std::to_string(b) + "] has a > b");
        segs.emplace_back(a, b);
        if (cur.done()) break;
        cur.expect('+');
    }
    return Multisegment(std::move(segs));
}

std::string Multisegment::str() const {
    std::string out;
    for (std::size_t i = 0; i < segs_.size(); ++i) {
        if (i) out += '+';
        out += '[' + std::to_string(segs_[i].a) + ',' + std::to_string(segs_[i].b) + ']';
    }
    return out;
}

Multisegment Multisegment::operator+(const Multisegment& rhs) const {
    std::vector<Segment> all = segs_;
    all.insert(all.end(), rhs.segs_.begin(), rhs.segs_.end());
    return Multisegment(std::move(all));
}

Multisegment shift(const Multisegment& m) {
    std::vector<Segment> out;
    out.reserve(m.size());
    for (const Segment& s : m.segments()) out.push_back(shift(s));
    return Multisegment(std::move(out));
}

Multisegment dual(const Multisegment& m) {
    std::vector<Segment> out;
    out.reserve(m.size());
    for (const Segment& s : m.segments()) out.push_back(dual(s));
    return Multisegment(std::move(out));
}

}  // namespace msl
