#include "params.hpp"

#include <algorithm>
#include <tuple>

namespace arthur {

std::tuple<HalfInt, HalfInt, Sign> triple_to_quad(int a, int b) {
    if (a < 1 || b < 1)
        throw Error(ErrorKind::invalid_block,
                    "need a, b >= 1, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    HalfInt A = HalfInt::from_twice(a + b - 2);
    HalfInt B = HalfInt::from_twice(a >= b ? a - b : b - a);
    Sign zeta = a >= b ? Sign::plus() : Sign::minus();
    return {A, B, zeta};
}

std::pair<int, int> quad_to_triple(HalfInt A, HalfInt B, Sign zeta) {
    return JordanBlock(CuspidalLabel(), A, B, zeta).triple();
}

bool has_parity(const JordanBlock& block, LGroupType lgroup) {
    if (!block.rho.self_dual) return false;
    int a_plus_b = block.A.twice() + 2;
    Sign s = *block.rho.eta * Sign::pow_minus_one(a_plus_b);
    return lgroup == LGroupType::orthogonal ? s.positive() : !s.positive();
}

ArthurParam::ArthurParam(std::vector<JordanBlock> blocks, LGroupType lgroup, Sign eta_G)
    : blocks_(std::move(blocks)), lgroup_(lgroup), eta_G_(eta_G) {
    std::stable_sort(blocks_.begin(), blocks_.end(), BlockOrder());
}

long long ArthurParam::dimension() const {
    long long dim = 0;
    for (const auto& b : blocks_) {
        auto [a, bb] = b.triple();
        dim += static_cast<long long>(b.rho.d) * a * bb;
    }
    return dim;
}

int ArthurParam::multiplicity(const BlockClass& cls) const {
    int m = 0;
    for (const auto& b : blocks_)
        if (BlockClass(b) == cls) ++m;
    return m;
}

int ArthurParam::class_position(size_t occurrence) const {
    BlockClass cls(blocks_.at(occurrence));
    int pos = 0;
    for (size_t i = 0; i <= occurrence; ++i)
        if (BlockClass(blocks_[i]) == cls) ++pos;
    return pos;
}

std::vector<BlockClass> ArthurParam::classes() const {
    std::vector<BlockClass> out;
    for (const auto& b : blocks_) {
        BlockClass cls(b);
        if (out.empty() || !(out.back() == cls)) out.push_back(cls);
    }
    return out;
}

std::vector<BlockClass> ArthurParam::good_classes() const {
    std::vector<BlockClass> out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (!good_parity(i)) continue;
        BlockClass cls(blocks_[i]);
        if (out.empty() || !(out.back() == cls)) out.push_back(cls);
    }
    return out;
}

std::string ArthurParam::str() const {
    std::string out = "{";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ",";
        out += blocks_[i].str();
    }
    return out + "}";
}

namespace {

std::string dual_name(const std::string& name) {
    if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
    return name + "*";
}

} // namespace

CentralizerShape centralizer(const ArthurParam& psi) {
    CentralizerShape shape;
    std::vector<BlockClass> handled;
    for (const auto& cls : psi.classes()) {
        if (std::find(handled.begin(), handled.end(), cls) != handled.end()) continue;
        handled.push_back(cls);
        int m = psi.multiplicity(cls);
        JordanBlock rep;
        for (const auto& b : psi.blocks())
            if (BlockClass(b) == cls) { rep = b; break; }
        if (!rep.rho.self_dual) {
            BlockClass dual = cls;
            dual.rho_name = dual_name(cls.rho_name);
            int md = psi.multiplicity(dual);
            if (md != m)
                throw Error(ErrorKind::invalid_parameter,
                            "class " + cls.str() + " lacks a matching dual of equal multiplicity");
            handled.push_back(dual);
            BlockClass key = cls.rho_name < dual.rho_name ? cls : dual;
            shape.factors.push_back({key, FactorKind::GL, m});
        } else if (has_parity(rep, psi.lgroup())) {
            shape.factors.push_back({cls, FactorKind::O, m});
        } else {
            if (m % 2 != 0)
                throw Error(ErrorKind::invalid_parameter,
                            "self-dual class without parity must have even multiplicity: " +
                                cls.str());
            shape.factors.push_back({cls, FactorKind::Sp, m / 2});
        }
    }
    return shape;
}

std::vector<EpsChar> enumerate_epschars(const ArthurParam& psi) {
    std::vector<BlockClass> classes = psi.good_classes();
    size_t k = classes.size();
    std::vector<int> mult;
    mult.reserve(k);
    for (const auto& c : classes) mult.push_back(psi.multiplicity(c));

    std::vector<EpsChar> out;
    for (size_t code = 0; code < (size_t(1) << k); ++code) {
        Sign product = Sign::plus();
        EpsChar eps;
        for (size_t i = 0; i < k; ++i) {
            Sign v = (code >> i) & 1 ? Sign::minus() : Sign::plus();
            eps.values[classes[i]] = v;
            product *= v.pow(mult[i]);
        }
        if (product == psi.eta_G()) out.push_back(std::move(eps));
    }
    return out;
}

bool valid_epschar(const ArthurParam& psi, const EpsChar& eps) {
    std::vector<BlockClass> classes = psi.good_classes();
    if (eps.values.size() != classes.size()) return false;
    Sign product = Sign::plus();
    for (const auto& cls : classes) {
        auto it = eps.values.find(cls);
        if (it == eps.values.end()) return false;
        product *= it->second.pow(psi.multiplicity(cls));
    }
    return product == psi.eta_G();
}

std::vector<JordanBlock> order_blocks(const ArthurParam& psi) { return psi.blocks(); }

std::vector<std::pair<std::string, int>> restriction_diagonal(const ArthurParam& psi) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& b : psi.blocks())
        for (HalfInt C = b.B; C <= b.A; C += HalfInt(1))
            out.emplace_back(b.rho.name, C.twice() + 1);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_discrete_diagonal(const ArthurParam& psi) {
    auto r = restriction_diagonal(psi);
    return std::adjacent_find(r.begin(), r.end()) == r.end();
}

bool is_elementary(const ArthurParam& psi) {
    for (const auto& b : psi.blocks())
        if (b.A != b.B) return false;
    return true;
}

DominationMap dominate(const ArthurParam& psi, int margin) {
    if (margin < 0) throw Error(ErrorKind::invalid_input, "negative margin");
    for (size_t i = 0; i < psi.blocks().size(); ++i)
        if (!psi.good_parity(i))
            throw Error(ErrorKind::unsupported,
                        "domination needs the parity condition on every block, violated by " +
                            psi.blocks()[i].str());

    std::map<std::string, HalfInt> ceiling; // highest shifted A so far, per cuspidal
    std::vector<int> shifts(psi.blocks().size(), 0);
    std::vector<std::pair<JordanBlock, size_t>> shifted;
    for (size_t i = 0; i < psi.blocks().size(); ++i) {
        const JordanBlock& b = psi.blocks()[i];
        int T = 0;
        auto it = ceiling.find(b.rho.name);
        if (it != ceiling.end()) {
            // smallest T with B+T separated from the previous interval by > margin
            HalfInt need = it->second + HalfInt(margin + 1) - b.B;
            if (need > HalfInt(0)) {
                if (need.twice() % 2 != 0)
                    throw Error(ErrorKind::invalid_parameter,
                                "blocks on " + b.rho.name + " mix integrality classes");
                T = need.as_int();
            }
        }
        shifts[i] = T;
        JordanBlock sb(b.rho, b.A + HalfInt(T), b.B + HalfInt(T), b.zeta);
        ceiling.insert_or_assign(b.rho.name, sb.A);
        shifted.emplace_back(sb, i);
    }

    std::stable_sort(shifted.begin(), shifted.end(),
                     [](const auto& x, const auto& y) { return BlockOrder()(x.first, y.first); });
    std::vector<JordanBlock> source_blocks;
    std::vector<size_t> source_index(psi.blocks().size());
    for (size_t j = 0; j < shifted.size(); ++j) {
        source_blocks.push_back(shifted[j].first);
        source_index[shifted[j].second] = j;
    }

    DominationMap dom;
    dom.source = psi.with_blocks(std::move(source_blocks));
    dom.target = psi;
    dom.shifts = std::move(shifts);
    dom.source_index = std::move(source_index);
    return dom;
}

} // namespace arthur
