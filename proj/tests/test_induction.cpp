#include <doctest.h>

#include <algorithm>

#include "induction.hpp"

using namespace arthur;

namespace {

const CuspidalLabel RP = CuspidalLabel::self_dual_label("rho", 1, Sign::plus());
const CuspidalLabel RM = CuspidalLabel::self_dual_label("sigma", 1, Sign::minus());
const CuspidalLabel NSD = CuspidalLabel::plain("chi", 1);

JordanBlock blk(const CuspidalLabel& rho, int a, int b) {
    auto [A, B, zeta] = triple_to_quad(a, b);
    return JordanBlock(rho, A, B, zeta);
}

ArthurParam param(std::vector<JordanBlock> blocks, Sign eta_G = Sign::plus()) {
    return ArthurParam(std::move(blocks), LGroupType::orthogonal, eta_G);
}

ConstituentSymbol empty_base() {
    return make_symbol({}, LGroupType::orthogonal, Sign::plus(), ZeroFlag::nonzero);
}

} // namespace

TEST_CASE("single-copy induction lengths") {
    for (int gap = 0; gap <= 8; ++gap) {
        for (int twiceB : {0, 1}) {
            HalfInt B = HalfInt::from_twice(twiceB);
            HalfInt A = B + HalfInt(gap);
            const CuspidalLabel& rho = B.is_integral() ? RP : RM;
            JordanBlock block(rho, A, B, Sign::plus());
            InducedDecomposition dec = decompose_speh_times(block, empty_base());
            CHECK(dec.length_bound == gap + 2);
            CHECK(dec.constituents.size() == static_cast<size_t>(gap + 2));
            auto [a, b] = block.triple();
            CHECK(gap + 2 == std::min(a, b) + 1);
            // parameter tuples pairwise distinct
            for (size_t i = 0; i < dec.constituents.size(); ++i)
                for (size_t j = i + 1; j < dec.constituents.size(); ++j)
                    CHECK(!(dec.constituents[i].levels == dec.constituents[j].levels));
        }
    }
}

TEST_CASE("induction constituent shape") {
    // A=B: two constituents
    InducedDecomposition dec =
        decompose_speh_times(JordanBlock(RP, HalfInt(2), HalfInt(2), Sign::plus()), empty_base());
    REQUIRE(dec.constituents.size() == 2);
    for (const auto& c : dec.constituents) {
        CHECK(c.param.blocks().size() == 2);
        // gap 0: both occurrences share eta
        CHECK(c.levels.at(0) == c.levels.at(1));
    }

    // odd gap: eta alternates between the two added occurrences
    InducedDecomposition dec2 =
        decompose_speh_times(JordanBlock(RP, HalfInt(2), HalfInt(1), Sign::plus()), empty_base());
    REQUIRE(dec2.constituents.size() == 3);
    for (const auto& c : dec2.constituents) {
        const auto& l0 = c.levels.at(0);
        const auto& l1 = c.levels.at(1);
        CHECK(l0.ell == l1.ell);
        if (l0.eta) CHECK(*l0.eta * *l1.eta == Sign::minus());
    }
}

TEST_CASE("induction preconditions") {
    // separation violated
    ConstituentSymbol base = make_symbol(
        {{JordanBlock(RP, HalfInt(3), HalfInt(1), Sign::plus()), SignedLevel(0, Sign::plus())}},
        LGroupType::orthogonal, Sign::plus());
    CHECK_THROWS_AS(
        decompose_speh_times(JordanBlock(RP, HalfInt(2), HalfInt(2), Sign::plus()), base), Error);
    // bad parity routed elsewhere
    CHECK_THROWS_AS(
        decompose_speh_times(JordanBlock(RM, HalfInt(2), HalfInt(2), Sign::plus()), empty_base()),
        Error);
}

TEST_CASE("multi-copy induction") {
    JordanBlock block(RP, HalfInt(2), HalfInt(2), Sign::plus());
    // a=1 agrees with the single-copy index set
    InducedDecomposition one = decompose_multi(block, 1, empty_base());
    InducedDecomposition ref = decompose_speh_times(block, empty_base());
    CHECK(one.constituents.size() == ref.constituents.size());

    // a=2, A=B: 2 constituents with 4 added occurrences of constant eta
    InducedDecomposition two = decompose_multi(block, 2, empty_base());
    REQUIRE(two.constituents.size() == 2);
    for (const auto& c : two.constituents) {
        REQUIRE(c.param.blocks().size() == 4);
        for (size_t i = 1; i < 4; ++i) CHECK(c.levels.at(i) == c.levels.at(0));
    }

    // block already present: single irreducible constituent
    ConstituentSymbol base = make_symbol({{block, SignedLevel(0, Sign::minus())}},
                                         LGroupType::orthogonal, Sign::plus());
    InducedDecomposition known = decompose_multi(block, 1, base);
    REQUIRE(known.constituents.size() == 1);
    const auto& sym = known.constituents[0];
    REQUIRE(sym.param.blocks().size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(sym.levels.at(i) == SignedLevel(0, Sign::minus()));
}

TEST_CASE("odd-multiplicity core factorization") {
    ArthurParam psi = param({blk(RP, 2, 2), blk(RP, 2, 2), blk(RP, 2, 2), blk(RP, 4, 4),
                             blk(RP, 4, 4), blk(RP, 6, 6)});
    PacketFactorization f = packet_sum_factorization(psi);
    // mult 3 -> core 1, one factor; mult 2 -> no core, one factor; mult 1 -> core only
    CHECK(f.psi0.blocks().size() == 2);
    REQUIRE(f.speh_factors.size() == 2);
    for (const auto& [block, count] : f.speh_factors) CHECK(count == 1);
    for (const auto& cls : psi.classes()) {
        int mult = psi.multiplicity(cls);
        int mult0 = f.psi0.multiplicity(cls);
        int count = 0;
        for (const auto& [block, c] : f.speh_factors)
            if (BlockClass(block) == cls) count = c;
        CHECK(mult0 + 2 * count == mult);
    }
}

TEST_CASE("bad-parity induction is order independent") {
    std::vector<JordanBlock> E = {blk(RP, 2, 1), blk(RM, 2, 2), blk(NSD, 3, 2)};
    ConstituentSymbol a = bad_parity_irreducible(E, empty_base());
    std::reverse(E.begin(), E.end());
    ConstituentSymbol b = bad_parity_irreducible(E, empty_base());
    CHECK(a.param == b.param);
    CHECK(a.param.blocks().size() == 6);
    CHECK_THROWS_AS(bad_parity_irreducible({blk(RP, 2, 2)}, empty_base()), Error);
    CHECK(bad_parity_irreducible({}, empty_base()).param.blocks().empty());
}

TEST_CASE("nonvanishing certificates") {
    // discrete-diagonal support with valid alternation
    ConstituentSymbol good = make_symbol(
        {{blk(RP, 2, 2), SignedLevel(0, Sign::plus())}, {blk(RP, 1, 5), SignedLevel(0, Sign::minus())}},
        LGroupType::orthogonal, Sign::plus());
    CHECK(nonvanishing_certificate(good) == ZeroFlag::nonzero);

    // fiber with mismatched levels
    ConstituentSymbol bad = make_symbol(
        {{blk(RM, 3, 2), SignedLevel(0, Sign::plus())}, {blk(RM, 3, 2), SignedLevel(1, std::nullopt)}},
        LGroupType::orthogonal, Sign::plus());
    CHECK(nonvanishing_certificate(bad) == ZeroFlag::zero);

    // valid fiber but overlapping support: undecided
    ConstituentSymbol overlap = make_symbol(
        {{blk(RP, 2, 2), SignedLevel(0, Sign::plus())}, {blk(RP, 4, 2), SignedLevel(0, Sign::plus())}},
        LGroupType::orthogonal, Sign::plus());
    CHECK(nonvanishing_certificate(overlap) == ZeroFlag::unknown);
}
