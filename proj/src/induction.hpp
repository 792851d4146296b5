#pragma once

#include "packets.hpp"

namespace arthur {

struct InducedDecomposition {
    std::vector<std::pair<JordanBlock, int>> factors; // (block, copies)
    ConstituentSymbol base;
    std::vector<ConstituentSymbol> constituents;
    int length_bound = 1;
};

// Induction by one copy of the block against a separated base: semisimple of
// length A-B+2, constituents indexed by (ell, eta).
InducedDecomposition decompose_speh_times(const JordanBlock& block, const ConstituentSymbol& base,
                                          int margin = 2);

// Induction by `copies` copies at once: same index set when the block is new,
// a single irreducible constituent when the block already occurs in the base.
InducedDecomposition decompose_multi(const JordanBlock& block, int copies,
                                     const ConstituentSymbol& base, int margin = 2);

struct PacketFactorization {
    ArthurParam psi0; // odd-multiplicity classes, each with multiplicity 1
    std::vector<std::pair<JordanBlock, int>> speh_factors; // (mult - mult0)/2 per class
};

PacketFactorization packet_sum_factorization(const ArthurParam& psi);

// Induction by blocks without the parity condition never splits.
ConstituentSymbol bad_parity_irreducible(const std::vector<JordanBlock>& E,
                                         const ConstituentSymbol& base);

ZeroFlag nonvanishing_certificate(const ConstituentSymbol& sym);

} // namespace arthur
