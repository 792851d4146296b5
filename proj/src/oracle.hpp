#pragma once

#include "jacquet.hpp"
#include "packets.hpp"

namespace arthur {

struct CheckItem {
    std::string name;
    std::string params;
    bool pass = true;
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(std::string name, std::string params, bool ok, std::string detail = "") {
        items.push_back({std::move(name), std::move(params), ok, std::move(detail)});
    }
};

// Signed expansion of an irreducible ladder into standard modules:
// sum over permutations w of sgn(w) * prod_i <b_i, e_{w(i)}>, rows sorted by
// descending start; zero-length factors are dropped from the term, negative
// lengths kill the term.
FormalSum expand_ladder(const Multisegment& ladder);

// Right-derivative support of the shifted tableau: zero away from zeta*(A+1).
CheckReport check_ladder_jac_support(HalfInt A, HalfInt B, int T, Sign zeta);

// Composite descent over doubled tableau cells, on the expansion, using the
// induced-representation derivative x -> Jac_x + Jac^d_{-x}; compares against
// twice the expansion of the lowered tableau.
CheckReport check_translation_identity(HalfInt A, HalfInt B, int T, Sign zeta);

// Agreement factor between the product-form and closed-form signs.
CheckReport tabulate_sign_agreement(int maxA);

// Label counting: both sign-character values together give A-B+2 labels.
CheckReport check_counts(int maxGap);

} // namespace arthur
