#pragma once

#include <gmpxx.h>

#include <string>

#include "superortho/partition.hpp"

namespace superortho {

// Largest n for which brute-force chain enumeration is permitted.
inline constexpr int kMaxChainN = 8;

// Odd/even chain counts over an interval of the refinement lattice.
struct ChainStats {
    mpz_class odd;
    mpz_class even;
    mpz_class d;  // odd - even
};

enum class CoeffSource { brute_force, closed_form, recursion, good_pair };

std::string to_string(CoeffSource source);

struct CoefficientValue {
    mpz_class value;
    CoeffSource source;
};

// Counts chains in C(p1, p2): totally ordered subsets under strict refinement
// whose finest element is p1 and coarsest is p2. Parity is by element count,
// so p1 == p2 gives the single one-element chain.
ChainStats count_chains(const SetPartition& p1, const SetPartition& p2);

// D(P0, P) for any P of the given type: (-1)^{n-m} prod (n_i - 1)!.
CoefficientValue d_closed_form(const PartitionType& t);

// Same value through the Stirling-number recursion
// D_{(n_i)} = -sum_{(k_i) != (n_i)} prod S(n_i, k_i) D_{(k_i)},
// with all-singleton base case 1. Memoized over sorted size tuples.
CoefficientValue d_recursion(const PartitionType& t);

// Sign shortcut for good partitions (every block size 1 or 2):
// D(p1, p2) = (-1)^{#2(p2) - #2(p1)}.
CoefficientValue d_good_pair(const SetPartition& p1, const SetPartition& p2);

// D(p1, p2) for any refinement pair via per-block quotient reduction:
// inside each block of p2 the interval is a full partition lattice on p1's
// sub-blocks, and factors multiply. Validated against count_chains.
CoefficientValue d_general(const SetPartition& p1, const SetPartition& p2);

}  // namespace superortho
