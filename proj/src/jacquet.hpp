#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "segments.hpp"

namespace arthur {

// Integer combination of multisegments; zero coefficients are never stored.
class FormalSum {
public:
    FormalSum() = default;
    explicit FormalSum(const Multisegment& m, long long coeff = 1) {
        if (coeff != 0) terms_[m] = coeff;
    }

    static FormalSum zero() { return FormalSum(); }

    const std::map<Multisegment, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Multisegment& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Multisegment& m, long long coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, 0);
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }

    FormalSum& operator+=(const FormalSum& other) {
        for (const auto& [m, c] : other.terms_) add(m, c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator*(long long k, const FormalSum& fs) {
        FormalSum out;
        if (k != 0)
            for (const auto& [m, c] : fs.terms_) out.terms_[m] = k * c;
        return out;
    }
    friend FormalSum operator-(const FormalSum& fs) { return -1 * fs; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a += -1 * b; }
    friend bool operator==(const FormalSum& a, const FormalSum& b) = default;

    std::string str() const;

private:
    std::map<Multisegment, long long> terms_;
};

// Strip the exponent x from the start of one segment, summed over all segments
// of each term whose first entry is x on the given cuspidal; extended linearly.
FormalSum jac_left(HalfInt x, const CuspidalLabel& rho, const FormalSum& fs);

// Mirror of jac_left at the last entry.
FormalSum jac_right(HalfInt x, const CuspidalLabel& rho, const FormalSum& fs);

// Composite operator: first element of xs applied first.
FormalSum jac_sequence(const std::vector<HalfInt>& xs, const CuspidalLabel& rho,
                       const FormalSum& fs);

struct Splitting {
    std::vector<HalfInt> e1, e2, e3;
};

// All 3^|xs| assignments of elements to three ordered parts.
std::vector<Splitting> split_three(const std::vector<HalfInt>& xs);

bool is_ladder(const Multisegment& m);

// Shape rule for irreducible ladders: the derivative at x survives exactly when
// one row starts at x and stripping it keeps the ladder shape.
std::optional<Multisegment> jac_ladder(HalfInt x, const Multisegment& ladder);

} // namespace arthur
