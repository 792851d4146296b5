#include "jacquet.hpp"

namespace arthur {

std::string FormalSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += m.str();
        first = false;
    }
    return out;
}

FormalSum jac_left(HalfInt x, const CuspidalLabel& rho, const FormalSum& fs) {
    FormalSum out;
    for (const auto& [m, c] : fs.terms()) {
        const auto& segs = m.segments();
        for (size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].rho == rho && segs[i].first == x)
                out.add(m.replace_at(i, segs[i].drop_first()), c);
        }
    }
    return out;
}

FormalSum jac_right(HalfInt x, const CuspidalLabel& rho, const FormalSum& fs) {
    FormalSum out;
    for (const auto& [m, c] : fs.terms()) {
        const auto& segs = m.segments();
        for (size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].rho == rho && segs[i].last == x)
                out.add(m.replace_at(i, segs[i].drop_last()), c);
        }
    }
    return out;
}

FormalSum jac_sequence(const std::vector<HalfInt>& xs, const CuspidalLabel& rho,
                       const FormalSum& fs) {
    FormalSum cur = fs;
    for (HalfInt x : xs) cur = jac_left(x, rho, cur);
    return cur;
}

std::vector<Splitting> split_three(const std::vector<HalfInt>& xs) {
    size_t n = xs.size();
    size_t count = 1;
    for (size_t i = 0; i < n; ++i) count *= 3;
    std::vector<Splitting> out;
    out.reserve(count);
    for (size_t code = 0; code < count; ++code) {
        Splitting s;
        size_t c = code;
        for (size_t i = 0; i < n; ++i) {
            switch (c % 3) {
                case 0: s.e1.push_back(xs[i]); break;
                case 1: s.e2.push_back(xs[i]); break;
                default: s.e3.push_back(xs[i]); break;
            }
            c /= 3;
        }
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// Rows sorted by descending first; firsts and lasts both strictly decreasing,
// all on one cuspidal with a common direction (singletons are flexible).
std::optional<std::vector<Segment>> ladder_rows(const Multisegment& m) {
    std::vector<Segment> rows = m.segments();
    if (rows.empty()) return rows;
    for (const auto& s : rows) {
        if (!(s.rho == rows[0].rho)) return std::nullopt;
        if (!(s.first - rows[0].first).is_integral()) return std::nullopt;
    }
    int dir = 0;
    for (const auto& s : rows) {
        int d = s.direction();
        if (d == 0) continue;
        if (dir == 0) dir = d;
        else if (dir != d) return std::nullopt;
    }
    std::sort(rows.begin(), rows.end(),
              [](const Segment& a, const Segment& b) { return a.first > b.first; });
    for (size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i - 1].first > rows[i].first)) return std::nullopt;
        if (!(rows[i - 1].last > rows[i].last)) return std::nullopt;
    }
    return rows;
}

} // namespace

bool is_ladder(const Multisegment& m) { return ladder_rows(m).has_value(); }

std::optional<Multisegment> jac_ladder(HalfInt x, const Multisegment& ladder) {
    auto rows = ladder_rows(ladder);
    if (!rows) throw Error(ErrorKind::invalid_input, "not a ladder: " + ladder.str());
    for (size_t i = 0; i < rows->size(); ++i) {
        if ((*rows)[i].first == x) {
            std::vector<Segment> out = *rows;
            auto dropped = out[i].drop_first();
            if (dropped)
                out[i] = *dropped;
            else
                out.erase(out.begin() + static_cast<long>(i));
            Multisegment result(std::move(out));
            if (!is_ladder(result)) return std::nullopt;
            return result;
        }
    }
    return std::nullopt;
}

} // namespace arthur
