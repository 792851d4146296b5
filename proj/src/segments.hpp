#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "halfint.hpp"

namespace arthur {

// Formal cuspidal symbol: a name, a rank, and for self-dual symbols the
// orthogonal/symplectic sign eta.
struct CuspidalLabel {
    std::string name;
    int d = 1;
    bool self_dual = true;
    std::optional<Sign> eta = Sign::plus();

    CuspidalLabel() = default;
    CuspidalLabel(std::string name_, int d_, bool self_dual_, std::optional<Sign> eta_)
        : name(std::move(name_)), d(d_), self_dual(self_dual_), eta(std::move(eta_)) {
        if (d < 1) throw Error(ErrorKind::invalid_input, "cuspidal rank must be positive: " + name);
        if (self_dual != eta.has_value())
            throw Error(ErrorKind::invalid_input,
                        "cuspidal " + name + ": eta must be present exactly when self-dual");
    }

    static CuspidalLabel self_dual_label(std::string name_, int d_, Sign eta_) {
        return CuspidalLabel(std::move(name_), d_, true, eta_);
    }
    static CuspidalLabel plain(std::string name_, int d_) {
        return CuspidalLabel(std::move(name_), d_, false, std::nullopt);
    }

    friend bool operator==(const CuspidalLabel& a, const CuspidalLabel& b) {
        return a.name == b.name;
    }
    friend std::strong_ordering operator<=>(const CuspidalLabel& a, const CuspidalLabel& b) {
        return a.name <=> b.name;
    }
};

// Arithmetic progression of exponents first, first±1, ..., last on one cuspidal.
// The orientation matters: left operators strip at `first`, right ones at `last`.
struct Segment {
    CuspidalLabel rho;
    HalfInt first;
    HalfInt last;

    Segment() = default;
    Segment(CuspidalLabel rho_, HalfInt first_, HalfInt last_)
        : rho(std::move(rho_)), first(first_), last(last_) {
        if (!(last - first).is_integral())
            throw Error(ErrorKind::invalid_input,
                        "segment endpoints must differ by an integer: [" + first.str() + "," +
                            last.str() + "]");
    }

    // Number of exponents.
    int length() const { return (last - first).abs().as_int() + 1; }

    // -1 decreasing, +1 increasing, 0 singleton.
    int direction() const {
        if (first == last) return 0;
        return first < last ? 1 : -1;
    }

    std::vector<HalfInt> entries() const {
        std::vector<HalfInt> out;
        int step = direction() >= 0 ? 2 : -2;
        for (int t = first.twice();; t += step) {
            out.push_back(HalfInt::from_twice(t));
            if (t == last.twice()) break;
        }
        return out;
    }

    bool contains_value(HalfInt x) const {
        HalfInt lo = std::min(first, last), hi = std::max(first, last);
        return lo <= x && x <= hi && (x - lo).is_integral();
    }

    // Segment without its first entry, if nonempty afterwards.
    std::optional<Segment> drop_first() const {
        if (first == last) return std::nullopt;
        int step = direction() > 0 ? 2 : -2;
        return Segment(rho, HalfInt::from_twice(first.twice() + step), last);
    }
    std::optional<Segment> drop_last() const {
        if (first == last) return std::nullopt;
        int step = direction() > 0 ? 2 : -2;
        return Segment(rho, first, HalfInt::from_twice(last.twice() - step));
    }

    std::string str() const {
        return "[" + first.str() + "," + last.str() + "]" +
               (rho.name.empty() ? "" : ":" + rho.name);
    }

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.rho == b.rho && a.first == b.first && a.last == b.last;
    }
    friend std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
        if (auto c = a.rho <=> b.rho; c != 0) return c;
        if (auto c = a.first <=> b.first; c != 0) return c;
        return a.last <=> b.last;
    }
};

// Multiset of segments kept sorted, so equality is multiset equality.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
        std::sort(segs_.begin(), segs_.end());
    }

    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    size_t size() const { return segs_.size(); }

    Multisegment with(const Segment& s) const {
        std::vector<Segment> v = segs_;
        v.push_back(s);
        return Multisegment(std::move(v));
    }

    // Replace the segment at index i (in sorted order) by `repl`, or erase it.
    Multisegment replace_at(size_t i, const std::optional<Segment>& repl) const {
        std::vector<Segment> v = segs_;
        if (repl)
            v[i] = *repl;
        else
            v.erase(v.begin() + static_cast<long>(i));
        return Multisegment(std::move(v));
    }

    Multisegment concat(const Multisegment& other) const {
        std::vector<Segment> v = segs_;
        v.insert(v.end(), other.segs_.begin(), other.segs_.end());
        return Multisegment(std::move(v));
    }

    int total_entries() const {
        int n = 0;
        for (const auto& s : segs_) n += s.length();
        return n;
    }

    std::string str() const {
        std::string out = "{";
        for (size_t i = 0; i < segs_.size(); ++i) {
            if (i) out += ",";
            out += segs_[i].str();
        }
        return out + "}";
    }

    friend bool operator==(const Multisegment& a, const Multisegment& b) = default;
    friend std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b) {
        return std::lexicographical_compare_three_way(a.segs_.begin(), a.segs_.end(),
                                                      b.segs_.begin(), b.segs_.end());
    }

private:
    std::vector<Segment> segs_;
};

void require_block_shape(HalfInt A, HalfInt B);

// Rows of the tableau attached to (rho, A, B, zeta): A-B+1 rows, row l being
// the segment [zeta(B+l-1), -zeta(A-l+1)].
Multisegment speh_rows(const CuspidalLabel& rho, HalfInt A, HalfInt B, Sign zeta);

// Rows of the shifted tableau with T rows, row k from the top being
// [zeta(B+T-k+1), zeta(A+T-k+1)].  T = 0 yields the empty multisegment.
Multisegment shifted_rows(Sign zeta, HalfInt A, HalfInt B, int T,
                          const CuspidalLabel& rho = CuspidalLabel());

// Row-major flattening of the shifted tableau, top row first.
std::vector<HalfInt> tableau_cells(Sign zeta, HalfInt A, HalfInt B, int T);

// Zelevinsky linkage: neither contains the other and the union is a segment.
bool linked(const Segment& s1, const Segment& s2);

} // namespace arthur
