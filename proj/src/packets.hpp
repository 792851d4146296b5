#pragma once

#include <map>
#include <optional>
#include <vector>

#include "params.hpp"

namespace arthur {

// Level ell plus the sign eta; eta is absent exactly when 2*ell = A-B+1.
struct SignedLevel {
    int ell = 0;
    std::optional<Sign> eta = Sign::plus();

    SignedLevel() = default;
    SignedLevel(int ell_, std::optional<Sign> eta_) : ell(ell_), eta(std::move(eta_)) {}

    std::string str() const {
        return "(" + std::to_string(ell) + "," + (eta ? eta->str() : "0") + ")";
    }

    friend bool operator==(const SignedLevel&, const SignedLevel&) = default;
};

bool valid_level(HalfInt A, HalfInt B, const SignedLevel& level);
void require_level(HalfInt A, HalfInt B, const SignedLevel& level);

// Per-occurrence level data; bad-parity occurrences carry no entry.
struct ConstituentParam {
    std::map<size_t, SignedLevel> assignments;

    const SignedLevel& at(size_t occurrence) const {
        auto it = assignments.find(occurrence);
        if (it == assignments.end())
            throw Error(ErrorKind::invalid_parameter,
                        "no level data for occurrence " + std::to_string(occurrence));
        return it->second;
    }

    friend bool operator==(const ConstituentParam&, const ConstituentParam&) = default;
};

enum class ZeroFlag { nonzero, zero, unknown };

inline const char* zero_flag_name(ZeroFlag z) {
    switch (z) {
        case ZeroFlag::nonzero: return "nonzero";
        case ZeroFlag::zero: return "zero";
        case ZeroFlag::unknown: return "unknown";
    }
    return "unknown";
}

struct ConstituentSymbol {
    ArthurParam param;
    EpsChar eps;
    ConstituentParam levels;
    ZeroFlag zero_flag = ZeroFlag::unknown;
};

Sign eps_closed_form(HalfInt A, HalfInt B, const SignedLevel& level);

// Literal product over C in [B+ell, A-ell] of eta*(-1)^C; integral blocks only.
Sign eps_product_form(HalfInt A, HalfInt B, const SignedLevel& level);

// A-B+2, the number of (ell, eta) labels for the block shape.
int count_params(HalfInt A, HalfInt B);

// All levels whose closed-form sign equals eps_value; ell ascending, + before -.
std::vector<SignedLevel> enumerate_levels(HalfInt A, HalfInt B, Sign eps_value);

// Cartesian product over good-parity classes; occurrences of one class share
// ell while eta alternates by (-1)^{A-B} along the class order.
std::vector<ConstituentParam> enumerate_constituents(const ArthurParam& psi, const EpsChar& eps);

// Transport of levels through the domination bijection.
ConstituentParam lift_params(const DominationMap& dom, const ConstituentParam& levels);

// True when the pair may index a nonzero representation: equal ell and
// eta1*eta2 = (-1)^{A-B}.
bool nullity_fiber(const SignedLevel& level1, const SignedLevel& level2, HalfInt A, HalfInt B);

// Recompute the class signs of a symbol from its first-occurrence levels.
EpsChar eps_from_levels(const ArthurParam& psi, const ConstituentParam& levels);

// Symbol with blocks and levels given as parallel data; sorts into canonical
// occurrence order and rebuilds eps.
ConstituentSymbol make_symbol(std::vector<std::pair<JordanBlock, std::optional<SignedLevel>>> data,
                              LGroupType lgroup, Sign eta_G, ZeroFlag flag = ZeroFlag::unknown);

struct JacSymbolResult {
    enum class Kind { symbol, zero, unknown };
    Kind kind = Kind::unknown;
    std::optional<ConstituentSymbol> value;
    std::string rule; // which rewrite fired, empty when unknown
};

// Partial evaluator for composite left derivatives on constituent symbols.
JacSymbolResult jac_symbol(const std::vector<HalfInt>& cells, const CuspidalLabel& rho,
                           const ConstituentSymbol& sym);

// Apply the defining translation descent of a domination to a symbol living on
// the shifted parameter; every step must fire the translation rewrite.
ConstituentSymbol descend(const DominationMap& dom, const ConstituentSymbol& sym_on_source);

} // namespace arthur
