#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segments.hpp"

namespace arthur {

enum class LGroupType { orthogonal, symplectic };

inline const char* lgroup_name(LGroupType t) {
    return t == LGroupType::orthogonal ? "orthogonal" : "symplectic";
}

struct JordanBlock {
    CuspidalLabel rho;
    HalfInt A;
    HalfInt B;
    Sign zeta;

    JordanBlock() = default;
    JordanBlock(CuspidalLabel rho_, HalfInt A_, HalfInt B_, Sign zeta_)
        : rho(std::move(rho_)), A(A_), B(B_), zeta(zeta_) {
        require_block_shape(A, B);
        if (B == HalfInt(0)) zeta = Sign::plus();
    }

    // a = A+B+1, b = A-B+1 when zeta=+, swapped when zeta=-.
    std::pair<int, int> triple() const {
        int p = (A + B + HalfInt(1)).as_int();
        int q = (A - B + HalfInt(1)).as_int();
        return zeta.positive() ? std::make_pair(p, q) : std::make_pair(q, p);
    }

    int a() const { return triple().first; }
    int b() const { return triple().second; }
    int gap() const { return (A - B).as_int(); }

    std::string str() const {
        return "(" + rho.name + "," + A.str() + "," + B.str() + "," + zeta.str() + ")";
    }

    friend bool operator==(const JordanBlock& x, const JordanBlock& y) {
        return x.rho == y.rho && x.A == y.A && x.B == y.B && x.zeta == y.zeta;
    }
};

// (A, B, zeta) -> ascending block order: smaller B first, then smaller A,
// then zeta=- before zeta=+, then cuspidal name.
struct BlockOrder {
    bool operator()(const JordanBlock& x, const JordanBlock& y) const {
        if (x.B != y.B) return x.B < y.B;
        if (x.A != y.A) return x.A < y.A;
        if (x.zeta != y.zeta) return !x.zeta.positive();
        return x.rho.name < y.rho.name;
    }
};

// Identity of a block up to multiplicity.
struct BlockClass {
    std::string rho_name;
    HalfInt A;
    HalfInt B;
    Sign zeta;

    BlockClass() = default;
    explicit BlockClass(const JordanBlock& b)
        : rho_name(b.rho.name), A(b.A), B(b.B), zeta(b.zeta) {}

    std::string str() const {
        return "(" + rho_name + "," + A.str() + "," + B.str() + "," + zeta.str() + ")";
    }

    friend bool operator==(const BlockClass&, const BlockClass&) = default;
    friend auto operator<=>(const BlockClass& x, const BlockClass& y) {
        if (auto c = x.B <=> y.B; c != 0) return c;
        if (auto c = x.A <=> y.A; c != 0) return c;
        if (auto c = x.zeta.value() <=> y.zeta.value(); c != 0) return c;
        return x.rho_name <=> y.rho_name;
    }
};

std::pair<HalfInt, HalfInt> triple_to_quad_AB(int a, int b);
// (a,b) with a,b >= 1 into (A, B, zeta); zeta=+ when a=b.
std::tuple<HalfInt, HalfInt, Sign> triple_to_quad(int a, int b);
std::pair<int, int> quad_to_triple(HalfInt A, HalfInt B, Sign zeta);

bool has_parity(const JordanBlock& block, LGroupType lgroup);

class ArthurParam {
public:
    ArthurParam() = default;
    ArthurParam(std::vector<JordanBlock> blocks, LGroupType lgroup, Sign eta_G);

    // Occurrences in ascending block order; indices are stable identifiers.
    const std::vector<JordanBlock>& blocks() const { return blocks_; }
    LGroupType lgroup() const { return lgroup_; }
    Sign eta_G() const { return eta_G_; }

    long long dimension() const;
    int multiplicity(const BlockClass& cls) const;
    bool contains(const BlockClass& cls) const { return multiplicity(cls) > 0; }
    // Position (1-based) of the occurrence within its class, in block order.
    int class_position(size_t occurrence) const;

    // Distinct classes in ascending block order.
    std::vector<BlockClass> classes() const;
    std::vector<BlockClass> good_classes() const;
    bool good_parity(size_t occurrence) const { return has_parity(blocks_[occurrence], lgroup_); }

    ArthurParam with_blocks(std::vector<JordanBlock> blocks) const {
        return ArthurParam(std::move(blocks), lgroup_, eta_G_);
    }

    std::string str() const;
    friend bool operator==(const ArthurParam& x, const ArthurParam& y) {
        return x.blocks_ == y.blocks_ && x.lgroup_ == y.lgroup_ &&
               x.eta_G_ == y.eta_G_;
    }

private:
    std::vector<JordanBlock> blocks_;
    LGroupType lgroup_ = LGroupType::orthogonal;
    Sign eta_G_ = Sign::plus();
};

enum class FactorKind { O, Sp, GL };

struct CentralizerFactor {
    BlockClass cls;
    FactorKind kind;
    int m;
};

struct CentralizerShape {
    std::vector<CentralizerFactor> factors;
};

CentralizerShape centralizer(const ArthurParam& psi);

// Sign assignment on good-parity classes with product (with multiplicity)
// equal to eta_G.
struct EpsChar {
    std::map<BlockClass, Sign> values;

    Sign at(const BlockClass& cls) const {
        auto it = values.find(cls);
        if (it == values.end())
            throw Error(ErrorKind::invalid_character, "no eps value for class " + cls.str());
        return it->second;
    }
};

std::vector<EpsChar> enumerate_epschars(const ArthurParam& psi);
bool valid_epschar(const ArthurParam& psi, const EpsChar& eps);

std::vector<JordanBlock> order_blocks(const ArthurParam& psi);

// Each block (rho,A,B,zeta) contributes {(rho, 2C+1) : C in [B, A]},
// returned sorted with repeats kept.
std::vector<std::pair<std::string, int>> restriction_diagonal(const ArthurParam& psi);

bool is_discrete_diagonal(const ArthurParam& psi);
bool is_elementary(const ArthurParam& psi);

struct DominationMap {
    ArthurParam source; // shifted parameter
    ArthurParam target; // original parameter
    std::vector<int> shifts; // by target occurrence index
    std::vector<size_t> source_index; // target occurrence -> source occurrence
};

// Greedy per-cuspidal shifts, ascending block order, making shifted intervals
// [B+T, A+T] pairwise separated by more than `margin`.
DominationMap dominate(const ArthurParam& psi, int margin = 2);

} // namespace arthur
