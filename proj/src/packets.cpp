#include "packets.hpp"

#include <algorithm>

namespace arthur {

bool valid_level(HalfInt A, HalfInt B, const SignedLevel& level) {
    int gap = (A - B).as_int();
    if (level.ell < 0 || 2 * level.ell > gap + 1) return false;
    bool boundary = 2 * level.ell == gap + 1;
    return boundary == !level.eta.has_value();
}

void require_level(HalfInt A, HalfInt B, const SignedLevel& level) {
    if (!valid_level(A, B, level))
        throw Error(ErrorKind::invalid_parameter,
                    "level " + level.str() + " invalid for A=" + A.str() + " B=" + B.str());
}

Sign eps_closed_form(HalfInt A, HalfInt B, const SignedLevel& level) {
    require_level(A, B, level);
    int n = (A - B).as_int() + 1;
    Sign eta_pow = level.eta ? level.eta->pow(n) : Sign::plus();
    return eta_pow * Sign::pow_minus_one(n / 2 + level.ell);
}

Sign eps_product_form(HalfInt A, HalfInt B, const SignedLevel& level) {
    require_level(A, B, level);
    if (!A.is_integral() || !B.is_integral())
        throw Error(ErrorKind::unsupported,
                    "product form needs integral A, B, got A=" + A.str() + " B=" + B.str());
    Sign out = Sign::plus();
    for (int C = B.as_int() + level.ell; C <= A.as_int() - level.ell; ++C)
        out *= *level.eta * Sign::pow_minus_one(C);
    return out;
}

int count_params(HalfInt A, HalfInt B) {
    require_block_shape(A, B);
    return (A - B).as_int() + 2;
}

std::vector<SignedLevel> enumerate_levels(HalfInt A, HalfInt B, Sign eps_value) {
    require_block_shape(A, B);
    int gap = (A - B).as_int();
    std::vector<SignedLevel> out;
    for (int ell = 0; 2 * ell <= gap + 1; ++ell) {
        if (2 * ell == gap + 1) {
            SignedLevel lv(ell, std::nullopt);
            if (eps_closed_form(A, B, lv) == eps_value) out.push_back(lv);
        } else {
            for (Sign eta : {Sign::plus(), Sign::minus()}) {
                SignedLevel lv(ell, eta);
                if (eps_closed_form(A, B, lv) == eps_value) out.push_back(lv);
            }
        }
    }
    return out;
}

std::vector<ConstituentParam> enumerate_constituents(const ArthurParam& psi, const EpsChar& eps) {
    if (!valid_epschar(psi, eps))
        throw Error(ErrorKind::invalid_character,
                    "eps is not a character of the parameter (product must equal eta_G)");
    std::vector<BlockClass> classes = psi.good_classes();
    std::vector<std::vector<SignedLevel>> choices;
    for (const auto& cls : classes)
        choices.push_back(enumerate_levels(cls.A, cls.B, eps.at(cls)));

    std::vector<ConstituentParam> out;
    std::vector<size_t> idx(classes.size(), 0);
    while (true) {
        ConstituentParam cp;
        for (size_t i = 0; i < psi.blocks().size(); ++i) {
            if (!psi.good_parity(i)) continue;
            BlockClass cls(psi.blocks()[i]);
            size_t c = std::find(classes.begin(), classes.end(), cls) - classes.begin();
            SignedLevel lv = choices[c][idx[c]];
            if (lv.eta) {
                int pos = psi.class_position(i);
                lv.eta = *lv.eta * Sign::pow_minus_one(
                                       static_cast<long long>(pos - 1) * psi.blocks()[i].gap());
            }
            cp.assignments.emplace(i, lv);
        }
        out.push_back(std::move(cp));
        // odometer, last class fastest
        size_t k = classes.size();
        while (k > 0) {
            --k;
            if (++idx[k] < choices[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (classes.empty()) return out;
    }
}

ConstituentParam lift_params(const DominationMap& dom, const ConstituentParam& levels) {
    ConstituentParam out;
    for (const auto& [occ, lv] : levels.assignments) {
        if (occ >= dom.source_index.size())
            throw Error(ErrorKind::invalid_parameter,
                        "level assignment outside the dominated parameter");
        out.assignments.emplace(dom.source_index[occ], lv);
    }
    return out;
}

bool nullity_fiber(const SignedLevel& level1, const SignedLevel& level2, HalfInt A, HalfInt B) {
    require_level(A, B, level1);
    require_level(A, B, level2);
    if (level1.ell != level2.ell) return false;
    if (!level1.eta || !level2.eta) return true;
    return *level1.eta * *level2.eta == Sign::pow_minus_one((A - B).as_int());
}

EpsChar eps_from_levels(const ArthurParam& psi, const ConstituentParam& levels) {
    EpsChar eps;
    for (size_t i = 0; i < psi.blocks().size(); ++i) {
        if (!psi.good_parity(i)) continue;
        BlockClass cls(psi.blocks()[i]);
        if (eps.values.count(cls)) continue;
        const SignedLevel& lv = levels.at(i);
        eps.values[cls] = eps_closed_form(cls.A, cls.B, lv);
    }
    return eps;
}

ConstituentSymbol make_symbol(std::vector<std::pair<JordanBlock, std::optional<SignedLevel>>> data,
                              LGroupType lgroup, Sign eta_G, ZeroFlag flag) {
    std::stable_sort(data.begin(), data.end(), [](const auto& x, const auto& y) {
        return BlockOrder()(x.first, y.first);
    });
    std::vector<JordanBlock> blocks;
    blocks.reserve(data.size());
    for (const auto& [b, lv] : data) blocks.push_back(b);
    ConstituentSymbol sym;
    sym.param = ArthurParam(std::move(blocks), lgroup, eta_G);
    for (size_t i = 0; i < data.size(); ++i)
        if (data[i].second) sym.levels.assignments.emplace(i, *data[i].second);
    sym.eps = eps_from_levels(sym.param, sym.levels);
    sym.zero_flag = flag;
    return sym;
}

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

/// Entries of the top row of the tableau for (A,B,zeta): zeta*B down to -zeta*A.
std::vector<HalfInt> descent_row(Sign zeta, HalfInt A, HalfInt B) {
    std::vector<HalfInt> out;
    HalfInt x = zeta.times(B);
    HalfInt stop = -zeta.times(A);
    HalfInt step = zeta.times(HalfInt(-1));
    while (true) {
        out.push_back(x);
        if (x == stop) break;
        x += step;
    }
    return out;
}

struct TableauShape {
    Sign zeta;
    HalfInt A, B;
    int T;
};

// Recognize a row-major shifted-tableau cell list.
std::optional<TableauShape> parse_tableau(const std::vector<HalfInt>& cells) {
    if (cells.empty() || cells[0] == HalfInt(0)) return std::nullopt;
    Sign zeta = Sign(cells[0].twice());
    size_t w = 1;
    while (w < cells.size() && cells[w] == cells[w - 1] + zeta.times(HalfInt(1))) ++w;
    if (cells.size() % w != 0) return std::nullopt;
    int T = static_cast<int>(cells.size() / w);
    HalfInt BT = zeta.times(cells[0]);
    HalfInt AT = zeta.times(cells[w - 1]);
    HalfInt B = BT - HalfInt(T), A = AT - HalfInt(T);
    if (B < HalfInt(0) || A < B) return std::nullopt;
    if (cells != tableau_cells(zeta, A, B, T)) return std::nullopt;
    return TableauShape{zeta, A, B, T};
}

JacSymbolResult wrap(const ConstituentSymbol& sym, const char* rule) {
    JacSymbolResult r;
    r.kind = JacSymbolResult::Kind::symbol;
    r.value = sym;
    r.rule = rule;
    return r;
}

} // namespace

JacSymbolResult jac_symbol(const std::vector<HalfInt>& cells, const CuspidalLabel& rho,
                           const ConstituentSymbol& sym) {
    if (cells.empty()) throw Error(ErrorKind::invalid_input, "empty cell list");
    if (sym.zero_flag == ZeroFlag::zero)
        throw Error(ErrorKind::precondition, "symbol is already zero");
    const auto& blocks = sym.param.blocks();

    // translation along the defining descent: strip one shifted tableau
    if (auto shape = parse_tableau(cells); shape && shape->T >= 1) {
        JordanBlock shifted_block(rho, shape->A + HalfInt(shape->T), shape->B + HalfInt(shape->T),
                                  shape->zeta);
        JordanBlock lowered(rho, shape->A, shape->B, shape->zeta);
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (!(blocks[i] == shifted_block)) continue;
            bool minimal = true;
            for (size_t j = 0; j < blocks.size(); ++j) {
                if (j == i || !(blocks[j].rho == rho)) continue;
                bool below = !BlockOrder()(lowered, blocks[j]);
                bool above = !BlockOrder()(blocks[j], shifted_block);
                if (!below && !above) { minimal = false; break; }
            }
            if (!minimal) continue;
            auto data = symbol_data(sym);
            data[i].first = lowered;
            return wrap(make_symbol(std::move(data), sym.param.lgroup(), sym.param.eta_G(),
                                    sym.zero_flag),
                        "translation");
        }
    }

    // repeated single exponent beyond the supply of blocks starting there
    if (std::all_of(cells.begin(), cells.end(), [&](HalfInt x) { return x == cells[0]; })) {
        size_t supply = 0;
        for (const auto& b : blocks)
            if (b.rho == rho && b.zeta.times(b.B) == cells[0]) ++supply;
        if (cells.size() > supply) {
            JacSymbolResult r;
            r.kind = JacSymbolResult::Kind::zero;
            r.rule = "vanishing-bound";
            return r;
        }
    }

    // single-cell lowering of an elementary block
    if (cells.size() == 1 && cells[0] != HalfInt(0)) {
        Sign zp(cells[0].twice());
        HalfInt Bp = zp.times(cells[0]);
        JordanBlock target(rho, Bp, Bp, zp);
        bool lowered_present = Bp >= HalfInt(1) &&
                               sym.param.contains(BlockClass(JordanBlock(
                                   rho, Bp - HalfInt(1), Bp - HalfInt(1), zp)));
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (!(blocks[i] == target) || lowered_present) continue;
            auto data = symbol_data(sym);
            if (Bp == HalfInt::half(1)) {
                // the lowered block would be empty
                data.erase(data.begin() + static_cast<long>(i));
            } else {
                data[i].first = JordanBlock(rho, Bp - HalfInt(1), Bp - HalfInt(1), zp);
            }
            return wrap(make_symbol(std::move(data), sym.param.lgroup(), sym.param.eta_G(),
                                    sym.zero_flag),
                        "block-lowering");
        }
    }

    // removal of an adjacent elementary pair
    if (cells[0] != HalfInt(0)) {
        Sign zp(cells[0].twice());
        HalfInt Bp = zp.times(cells[0]);
        if (Bp >= HalfInt(1)) {
            std::vector<HalfInt> expected;
            for (HalfInt x = zp.times(Bp); ; x += zp.times(HalfInt(-1))) {
                expected.push_back(x);
                if (x == -zp.times(Bp - HalfInt(1))) break;
            }
            JordanBlock upper(rho, Bp, Bp, zp);
            JordanBlock lower(rho, Bp - HalfInt(1), Bp - HalfInt(1), zp);
            if (cells == expected && sym.param.contains(BlockClass(upper)) &&
                sym.param.contains(BlockClass(lower))) {
                auto data = symbol_data(sym);
                auto remove_one = [&](const JordanBlock& b) {
                    for (size_t i = 0; i < data.size(); ++i)
                        if (data[i].first == b) {
                            data.erase(data.begin() + static_cast<long>(i));
                            return;
                        }
                };
                remove_one(upper);
                remove_one(lower);
                return wrap(make_symbol(std::move(data), sym.param.lgroup(), sym.param.eta_G(),
                                        sym.zero_flag),
                            "pair-removal");
            }
        }
    }

    // level lowering: the whole first row, once per copy of the class
    for (const auto& cls : sym.param.classes()) {
        if (cls.rho_name != rho.name) continue;
        if ((cls.A - cls.B).as_int() < 2) continue;
        int m = sym.param.multiplicity(cls);
        std::vector<HalfInt> row = descent_row(cls.zeta, cls.A, cls.B);
        std::vector<HalfInt> expected;
        for (int k = 0; k < m; ++k) expected.insert(expected.end(), row.begin(), row.end());
        if (cells != expected) continue;
        bool ok = true;
        std::vector<size_t> occs;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (!(blocks[i].rho == rho)) continue;
            if (BlockClass(blocks[i]) == cls) {
                auto it = sym.levels.assignments.find(i);
                if (it == sym.levels.assignments.end() || it->second.ell == 0) ok = false;
                occs.push_back(i);
            } else if (!(blocks[i].B > cls.A + HalfInt(1)) &&
                       !(blocks[i].A < cls.B - HalfInt(1))) {
                ok = false;
            }
        }
        if (!ok) continue;
        auto data = symbol_data(sym);
        for (size_t i : occs) {
            data[i].first = JordanBlock(rho, cls.A - HalfInt(1), cls.B + HalfInt(1), cls.zeta);
            data[i].second->ell -= 1;
        }
        return wrap(make_symbol(std::move(data), sym.param.lgroup(), sym.param.eta_G(),
                                sym.zero_flag),
                    "level-lowering");
    }

    return JacSymbolResult{};
}

ConstituentSymbol descend(const DominationMap& dom, const ConstituentSymbol& sym_on_source) {
    ConstituentSymbol cur = sym_on_source;
    for (size_t i = 0; i < dom.target.blocks().size(); ++i) {
        int T = dom.shifts[i];
        if (T == 0) continue;
        const JordanBlock& b = dom.target.blocks()[i];
        std::vector<HalfInt> cells = tableau_cells(b.zeta, b.A, b.B, T);
        JacSymbolResult res = jac_symbol(cells, b.rho, cur);
        if (res.kind != JacSymbolResult::Kind::symbol || res.rule != "translation")
            throw Error(ErrorKind::precondition,
                        "descent step for " + b.str() + " did not translate");
        cur = *res.value;
    }
    return cur;
}

} // namespace arthur
