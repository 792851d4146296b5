#include "induction.hpp"

#include <algorithm>

namespace arthur {

namespace {

std::vector<std::pair<JordanBlock, std::optional<SignedLevel>>> symbol_data(
    const ConstituentSymbol& sym) {
    std::vector<std::pair<JordanBlock, std::optional<SignedLevel>>> out;
    for (size_t i = 0; i < sym.param.blocks().size(); ++i) {
        auto it = sym.levels.assignments.find(i);
        out.emplace_back(sym.param.blocks()[i],
                         it == sym.levels.assignments.end()
                             ? std::nullopt
                             : std::optional<SignedLevel>(it->second));
    }
    return out;
}

void require_separation(const JordanBlock& block, const ConstituentSymbol& base, int margin) {
    for (const auto& b : base.param.blocks()) {
        if (!(b.rho == block.rho)) continue;
        // further occurrences of a class already in the base just extend it
        if (BlockClass(b) == BlockClass(block)) continue;
        if (b.A < block.B || b.B > block.A + HalfInt(margin)) continue;
        throw Error(ErrorKind::precondition,
                    "separation violated: base block " + b.str() + " meets " + block.str());
    }
}

// All (ell, eta) labels for the block shape, across both sign-character values.
std::vector<SignedLevel> all_levels(HalfInt A, HalfInt B) {
    std::vector<SignedLevel> out = enumerate_levels(A, B, Sign::plus());
    for (const auto& lv : enumerate_levels(A, B, Sign::minus())) out.push_back(lv);
    std::sort(out.begin(), out.end(), [](const SignedLevel& x, const SignedLevel& y) {
        if (x.ell != y.ell) return x.ell < y.ell;
        int xe = x.eta ? (x.eta->positive() ? 0 : 1) : 2;
        int ye = y.eta ? (y.eta->positive() ? 0 : 1) : 2;
        return xe < ye;
    });
    return out;
}

} // namespace

InducedDecomposition decompose_multi(const JordanBlock& block, int copies,
                                     const ConstituentSymbol& base, int margin) {
    if (copies < 1) throw Error(ErrorKind::invalid_input, "need at least one copy");
    if (!has_parity(block, base.param.lgroup()))
        throw Error(ErrorKind::precondition,
                    "block " + block.str() +
                        " lacks the parity condition; this induction never splits");
    require_separation(block, base, margin);

    int gap = block.gap();
    BlockClass cls(block);
    int existing = base.param.multiplicity(cls);

    InducedDecomposition dec;
    dec.factors.emplace_back(block, copies);
    dec.base = base;
    dec.length_bound = gap + 2;

    auto build = [&](const SignedLevel& lv) {
        auto data = symbol_data(base);
        for (int i = 1; i <= 2 * copies; ++i) {
            SignedLevel occ = lv;
            if (occ.eta)
                occ.eta = *occ.eta *
                          Sign::pow_minus_one(static_cast<long long>(existing + i - 1) * gap);
            data.emplace_back(block, occ);
        }
        ZeroFlag flag =
            base.zero_flag == ZeroFlag::nonzero ? ZeroFlag::nonzero : base.zero_flag;
        return make_symbol(std::move(data), base.param.lgroup(), base.param.eta_G(), flag);
    };

    if (existing > 0) {
        // continue the pattern started by the base occurrences of the class
        size_t first_occ = 0;
        for (size_t i = 0; i < base.param.blocks().size(); ++i)
            if (BlockClass(base.param.blocks()[i]) == cls) { first_occ = i; break; }
        dec.constituents.push_back(build(base.levels.at(first_occ)));
    } else {
        for (const auto& lv : all_levels(block.A, block.B)) dec.constituents.push_back(build(lv));
    }
    return dec;
}

InducedDecomposition decompose_speh_times(const JordanBlock& block, const ConstituentSymbol& base,
                                          int margin) {
    return decompose_multi(block, 1, base, margin);
}

PacketFactorization packet_sum_factorization(const ArthurParam& psi) {
    for (size_t i = 0; i < psi.blocks().size(); ++i)
        if (!psi.good_parity(i))
            throw Error(ErrorKind::precondition,
                        "factorization needs the parity condition on every block");
    PacketFactorization out;
    std::vector<JordanBlock> core;
    for (const auto& cls : psi.classes()) {
        int mult = psi.multiplicity(cls);
        JordanBlock rep;
        for (const auto& b : psi.blocks())
            if (BlockClass(b) == cls) { rep = b; break; }
        int mult0 = mult % 2;
        if (mult0 == 1) core.push_back(rep);
        if ((mult - mult0) / 2 > 0) out.speh_factors.emplace_back(rep, (mult - mult0) / 2);
    }
    out.psi0 = psi.with_blocks(std::move(core));
    return out;
}

ConstituentSymbol bad_parity_irreducible(const std::vector<JordanBlock>& E,
                                         const ConstituentSymbol& base) {
    for (const auto& b : E)
        if (has_parity(b, base.param.lgroup()))
            throw Error(ErrorKind::precondition,
                        "block " + b.str() + " has the parity condition");
    auto data = symbol_data(base);
    for (const auto& b : E) {
        if (b.rho.self_dual) {
            data.emplace_back(b, std::nullopt);
            data.emplace_back(b, std::nullopt);
        } else {
            std::string dn = b.rho.name;
            if (!dn.empty() && dn.back() == '*') dn.pop_back();
            else dn += '*';
            CuspidalLabel dual = CuspidalLabel::plain(dn, b.rho.d);
            data.emplace_back(b, std::nullopt);
            data.emplace_back(JordanBlock(dual, b.A, b.B, b.zeta), std::nullopt);
        }
    }
    return make_symbol(std::move(data), base.param.lgroup(), base.param.eta_G(), base.zero_flag);
}

ZeroFlag nonvanishing_certificate(const ConstituentSymbol& sym) {
    if (sym.zero_flag == ZeroFlag::zero) return ZeroFlag::zero;

    std::vector<JordanBlock> good_classes;
    const auto& blocks = sym.param.blocks();
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!sym.param.good_parity(i)) continue;
        size_t prev = i;
        bool has_prev = false;
        for (size_t j = 0; j < i; ++j)
            if (sym.param.good_parity(j) && BlockClass(blocks[j]) == BlockClass(blocks[i])) {
                prev = j;
                has_prev = true;
            }
        if (has_prev) {
            if (!nullity_fiber(sym.levels.at(prev), sym.levels.at(i), blocks[i].A, blocks[i].B))
                return ZeroFlag::zero;
        } else {
            good_classes.push_back(blocks[i]);
        }
    }

    ArthurParam support = sym.param.with_blocks(good_classes);
    if (is_discrete_diagonal(support)) return ZeroFlag::nonzero;
    return ZeroFlag::unknown;
}

} // namespace arthur
