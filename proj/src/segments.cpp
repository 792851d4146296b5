#include "segments.hpp"

#include <set>

namespace arthur {

void require_block_shape(HalfInt A, HalfInt B) {
    if (!(A >= B && B >= HalfInt(0)))
        throw Error(ErrorKind::invalid_block,
                    "need A >= B >= 0, got A=" + A.str() + " B=" + B.str());
    if (!(A - B).is_integral())
        throw Error(ErrorKind::invalid_block,
                    "A-B must be an integer, got A=" + A.str() + " B=" + B.str());
}

Multisegment speh_rows(const CuspidalLabel& rho, HalfInt A, HalfInt B, Sign zeta) {
    require_block_shape(A, B);
    int nrows = (A - B).as_int() + 1;
    std::vector<Segment> rows;
    rows.reserve(static_cast<size_t>(nrows));
    for (int l = 1; l <= nrows; ++l) {
        HalfInt first = zeta.times(B + HalfInt(l - 1));
        HalfInt last = -zeta.times(A - HalfInt(l - 1));
        rows.emplace_back(rho, first, last);
    }
    return Multisegment(std::move(rows));
}

Multisegment shifted_rows(Sign zeta, HalfInt A, HalfInt B, int T, const CuspidalLabel& rho) {
    require_block_shape(A, B);
    if (T < 0) throw Error(ErrorKind::invalid_input, "negative shift T");
    std::vector<Segment> rows;
    rows.reserve(static_cast<size_t>(T));
    for (int k = 1; k <= T; ++k) {
        HalfInt first = zeta.times(B + HalfInt(T - k + 1));
        HalfInt last = zeta.times(A + HalfInt(T - k + 1));
        rows.emplace_back(rho, first, last);
    }
    return Multisegment(std::move(rows));
}

std::vector<HalfInt> tableau_cells(Sign zeta, HalfInt A, HalfInt B, int T) {
    require_block_shape(A, B);
    if (T < 0) throw Error(ErrorKind::invalid_input, "negative shift T");
    std::vector<HalfInt> cells;
    for (int k = 1; k <= T; ++k) {
        for (HalfInt c = B + HalfInt(T - k + 1); c <= A + HalfInt(T - k + 1); c += HalfInt(1))
            cells.push_back(zeta.times(c));
    }
    return cells;
}

bool linked(const Segment& s1, const Segment& s2) {
    if (!(s1.rho == s2.rho)) return false;
    if (!(s1.first - s2.first).is_integral()) return false;
    HalfInt lo1 = std::min(s1.first, s1.last), hi1 = std::max(s1.first, s1.last);
    HalfInt lo2 = std::min(s2.first, s2.last), hi2 = std::max(s2.first, s2.last);
    bool contains = (lo1 <= lo2 && hi2 <= hi1) || (lo2 <= lo1 && hi1 <= hi2);
    if (contains) return false;
    HalfInt lo = std::min(lo1, lo2), hi = std::max(hi1, hi2);
    int union_len = (hi - lo).as_int() + 1;
    int len1 = (hi1 - lo1).as_int() + 1;
    int len2 = (hi2 - lo2).as_int() + 1;
    // Union is a segment iff the intervals touch or overlap.
    return union_len <= len1 + len2;
}

} // namespace arthur
