#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace arthur {

namespace {

int permutation_sign(const std::vector<size_t>& perm) {
    int sgn = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sgn = -sgn;
    return sgn;
}

} // namespace

FormalSum expand_ladder(const Multisegment& ladder) {
    if (ladder.empty()) return FormalSum(Multisegment());
    if (!is_ladder(ladder))
        throw Error(ErrorKind::invalid_input, "not a ladder: " + ladder.str());

    std::vector<Segment> rows = ladder.segments();
    std::sort(rows.begin(), rows.end(),
              [](const Segment& a, const Segment& b) { return a.first > b.first; });

    int dir = 0;
    for (const auto& r : rows)
        if (int d = r.direction(); d != 0) { dir = d; break; }
    if (dir == 0) {
        // column tableau: all cells share a sign, segments run toward zero
        dir = rows[0].first > HalfInt(0) ? 1 : -1;
    }

    const CuspidalLabel& rho = rows[0].rho;
    size_t k = rows.size();
    std::vector<size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);

    FormalSum out;
    do {
        int sgn = permutation_sign(perm);
        std::vector<Segment> term;
        bool dead = false;
        for (size_t i = 0; i < k && !dead; ++i) {
            HalfInt b = rows[i].first;
            HalfInt e = rows[perm[i]].last;
            int len = dir * (e - b).twice() / 2 + 1;
            if (len < 0) dead = true;
            else if (len > 0) term.emplace_back(rho, b, e);
        }
        if (!dead) out.add(Multisegment(std::move(term)), sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

CheckReport check_ladder_jac_support(HalfInt A, HalfInt B, int T, Sign zeta) {
    CheckReport report;
    report.suite = "ladder-jac";
    std::string params = "A=" + A.str() + " B=" + B.str() + " T=" + std::to_string(T) +
                         " zeta=" + zeta.str();
    CuspidalLabel rho;
    Multisegment tab = shifted_rows(zeta, A, B, T, rho);
    if (tab.empty()) {
        report.add("support", params, true, "empty tableau");
        return report;
    }
    FormalSum expansion = expand_ladder(tab);
    HalfInt hotspot = zeta.times(A + HalfInt(1));

    // candidate exponents in the integrality class of the cells
    for (int t = -(A + HalfInt(T + 1)).twice(); t <= (A + HalfInt(T + 1)).twice(); t += 2) {
        HalfInt x = HalfInt::from_twice(t);
        if ((x - B).twice() % 2 != 0) continue;
        FormalSum d = jac_right(x, rho, expansion);
        bool expect_nonzero = x == hotspot;
        bool ok = d.is_zero() != expect_nonzero;
        if (!ok)
            report.add("support", params + " x=" + x.str(), false,
                       expect_nonzero ? "vanishes at zeta*(A+1)" : "nonzero derivative: " + d.str());
    }
    if (report.items.empty()) report.add("support", params, true);
    return report;
}

CheckReport check_translation_identity(HalfInt A, HalfInt B, int T, Sign zeta) {
    CheckReport report;
    report.suite = "translation";
    std::string params = "A=" + A.str() + " B=" + B.str() + " T=" + std::to_string(T) +
                         " zeta=" + zeta.str();
    CuspidalLabel rho;
    FormalSum cur = expand_ladder(speh_rows(rho, A + HalfInt(T), B + HalfInt(T), zeta));
    std::vector<HalfInt> cells = tableau_cells(zeta, A, B, T);
    std::vector<HalfInt> doubled = cells;
    doubled.insert(doubled.end(), cells.begin(), cells.end());
    for (HalfInt x : doubled) cur = jac_left(x, rho, cur) + jac_right(-x, rho, cur);
    // each step doubles the sum until the shift exceeds the row count
    int expo = std::min(T, (A - B).as_int() + 1);
    FormalSum expected = (1LL << expo) * expand_ladder(speh_rows(rho, A, B, zeta));
    bool ok = cur == expected;
    report.add("translation", params, ok,
               ok ? "" : "got " + cur.str() + ", expected " + expected.str());
    return report;
}

CheckReport tabulate_sign_agreement(int maxA) {
    CheckReport report;
    report.suite = "signs";
    int checked = 0;
    for (int Ai = 0; Ai <= maxA; ++Ai) {
        for (int Bi = 0; Bi <= Ai; ++Bi) {
            HalfInt A(Ai), B(Bi);
            int gap = Ai - Bi;
            for (int ell = 0; 2 * ell <= gap + 1; ++ell) {
                std::vector<SignedLevel> levels;
                if (2 * ell == gap + 1)
                    levels.emplace_back(ell, std::nullopt);
                else {
                    levels.emplace_back(ell, Sign::plus());
                    levels.emplace_back(ell, Sign::minus());
                }
                for (const auto& lv : levels) {
                    Sign product = eps_product_form(A, B, lv);
                    Sign closed = eps_closed_form(A, B, lv);
                    long long n = gap + 1 - 2 * ell;
                    long long expo = n * (Ai + Bi) / 2 - (gap + 1) / 2 - ell;
                    Sign expected = Sign::pow_minus_one(expo);
                    ++checked;
                    if (!(product * closed == expected))
                        report.add("signs",
                                   "A=" + A.str() + " B=" + B.str() + " level=" + lv.str(), false,
                                   "product=" + product.str() + " closed=" + closed.str() +
                                       " expected ratio=" + expected.str());
                }
            }
        }
    }
    if (report.items.empty())
        report.add("signs", "maxA=" + std::to_string(maxA), true,
                   std::to_string(checked) + " combinations");
    return report;
}

CheckReport check_counts(int maxGap) {
    CheckReport report;
    report.suite = "counts";
    int checked = 0;
    for (int gap = 0; gap <= maxGap; ++gap) {
        for (int twiceB : {0, 1, 2, 3}) {
            HalfInt B = HalfInt::from_twice(twiceB);
            HalfInt A = B + HalfInt(gap);
            int total = static_cast<int>(enumerate_levels(A, B, Sign::plus()).size() +
                                         enumerate_levels(A, B, Sign::minus()).size());
            auto [a, b] = quad_to_triple(A, B, Sign::plus());
            int expected = std::min(a, b) + 1;
            ++checked;
            if (total != gap + 2 || total != expected || count_params(A, B) != total)
                report.add("counts", "A=" + A.str() + " B=" + B.str(), false,
                           "enumerated " + std::to_string(total) + ", expected " +
                               std::to_string(gap + 2));
        }
    }
    if (report.items.empty())
        report.add("counts", "maxGap=" + std::to_string(maxGap), true,
                   std::to_string(checked) + " shapes");
    return report;
}

} // namespace arthur
