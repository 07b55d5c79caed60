#include "superortho/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "superortho/stirling.hpp"

namespace superortho {

std::string to_string(CoeffSource source) {
    switch (source) {
        case CoeffSource::brute_force: return "brute-force";
        case CoeffSource::closed_form: return "closed-form";
        case CoeffSource::recursion: return "recursion";
        case CoeffSource::good_pair: return "good-pair";
    }
    return "unknown";
}

namespace {

struct OddEven {
    mpz_class odd;
    mpz_class even;
};

// Chains from cur (finest) to target (coarsest); memoized per top-level call.
const OddEven& chains_from(const SetPartition& cur, const SetPartition& target,
                           std::map<SetPartition, OddEven>& memo) {
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    OddEven result;
    if (cur == target) {
        result.odd = 1;
        result.even = 0;
    } else {
        // Prepending cur to a chain starting at any strictly coarser q flips
        // the parity.
        for (const SetPartition& q : enumerate_coarsenings(cur)) {
            if (q == cur || !refines(q, target)) continue;
            const OddEven& sub = chains_from(q, target, memo);
            result.odd += sub.even;
            result.even += sub.odd;
        }
    }
    return memo.emplace(cur, std::move(result)).first->second;
}

}  // namespace

ChainStats count_chains(const SetPartition& p1, const SetPartition& p2) {
    if (!refines(p1, p2))
        throw std::domain_error("count_chains: p1 does not refine p2");
    if (p1.n() > kMaxChainN)
        throw std::domain_error("count_chains: n exceeds brute-force limit");
    std::map<SetPartition, OddEven> memo;
    const OddEven& root = chains_from(p1, p2, memo);
    return ChainStats{root.odd, root.even, root.odd - root.even};
}

CoefficientValue d_closed_form(const PartitionType& t) {
    mpz_class value = 1;
    for (int size : t.sizes) value *= factorial(size - 1);
    if ((t.n - t.block_count()) % 2) value = -value;
    return CoefficientValue{std::move(value), CoeffSource::closed_form};
}

namespace {

mpz_class d_recursion_impl(std::vector<int> sizes,
                           std::map<std::vector<int>, mpz_class>& memo) {
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    auto it = memo.find(sizes);
    if (it != memo.end()) return it->second;
    const size_t m = sizes.size();
    mpz_class result;
    if (sizes[0] == 1) {
        result = 1;  // all-singleton tuple
    } else {
        const StirlingTable table(sizes[0]);
        mpz_class sum = 0;
        std::vector<int> k(m, 1);
        for (;;) {
            if (k != sizes) {
                mpz_class weight = 1;
                for (size_t i = 0; i < m; ++i)
                    weight *= table.at(sizes[i], k[i]);
                sum += weight * d_recursion_impl(k, memo);
            }
            size_t i = 0;
            while (i < m && k[i] == sizes[i]) k[i++] = 1;
            if (i == m) break;
            ++k[i];
        }
        result = -sum;
    }
    return memo.emplace(std::move(sizes), std::move(result)).first->second;
}

}  // namespace

CoefficientValue d_recursion(const PartitionType& t) {
    std::map<std::vector<int>, mpz_class> memo;
    return CoefficientValue{d_recursion_impl(t.sizes, memo),
                            CoeffSource::recursion};
}

namespace {

bool is_good(const SetPartition& p) {
    for (const auto& block : p.blocks())
        if (block.size() > 2) return false;
    return true;
}

int count_pairs(const SetPartition& p) {
    int pairs = 0;
    for (const auto& block : p.blocks())
        if (block.size() == 2) ++pairs;
    return pairs;
}

}  // namespace

CoefficientValue d_good_pair(const SetPartition& p1, const SetPartition& p2) {
    if (!is_good(p1) || !is_good(p2))
        throw std::domain_error("d_good_pair: partition is not good");
    if (!refines(p1, p2))
        throw std::domain_error("d_good_pair: p1 does not refine p2");
    const int m = count_pairs(p2) - count_pairs(p1);
    return CoefficientValue{mpz_class(m % 2 ? -1 : 1), CoeffSource::good_pair};
}

CoefficientValue d_general(const SetPartition& p1, const SetPartition& p2) {
    if (!refines(p1, p2))
        throw std::domain_error("d_general: p1 does not refine p2");
    // Inside each block of p2 the interval [p1|_B, {B}] is the full partition
    // lattice on p1's sub-blocks, merged to the top, so each block contributes
    // the single-block closed-form factor (-1)^{m_B - 1} (m_B - 1)!.
    mpz_class value = 1;
    for (const auto& block : p2.blocks()) {
        std::vector<int> sub_blocks;
        for (int e : block) {
            const int b = p1.block_of(e);
            if (std::find(sub_blocks.begin(), sub_blocks.end(), b) ==
                sub_blocks.end())
                sub_blocks.push_back(b);
        }
        const int m_b = static_cast<int>(sub_blocks.size());
        value *= d_closed_form(PartitionType({m_b})).value;
    }
    return CoefficientValue{std::move(value), CoeffSource::closed_form};
}

}  // namespace superortho
