#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace superortho {

// Largest ground-set size for which exhaustive set-partition enumeration is
// permitted (Bell(12) ~ 4.2M).
inline constexpr int kMaxEnumerationN = 12;

// A partition of [n] into disjoint nonempty blocks. Blocks are kept in
// canonical form: elements ascending within a block, blocks ordered by their
// minimum element, so structural equality is lattice-element identity.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    static SetPartition singletons(int n);
    static SetPartition top(int n);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    // Index (into blocks()) of the block containing a 1-based element.
    int block_of(int element) const;

    bool operator==(const SetPartition& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }
    bool operator<(const SetPartition& other) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;  // element-1 -> block position
};

// Multiset of block sizes, stored non-increasing.
struct PartitionType {
    std::vector<int> sizes;
    int n = 0;

    explicit PartitionType(std::vector<int> s);
    PartitionType() = default;

    int block_count() const { return static_cast<int>(sizes.size()); }
    bool operator==(const PartitionType&) const = default;
    bool operator<(const PartitionType& other) const {
        return sizes < other.sizes;
    }
};

// Streams every set partition of [n] in canonical (restricted-growth) order.
void for_each_set_partition(int n,
                            const std::function<void(const SetPartition&)>& fn);

std::vector<SetPartition> enumerate_set_partitions(int n);

bool refines(const SetPartition& p1, const SetPartition& p2);

PartitionType partition_type(const SetPartition& p);

// All q with refines(p, q), including p itself.
std::vector<SetPartition> enumerate_coarsenings(const SetPartition& p);

// Exact number of set partitions of [n] with the given type:
// n! / (prod sizes! * prod multiplicity!).
mpz_class count_partitions_of_type(const PartitionType& t);

mpz_class factorial(int n);

// p(n) by Euler's pentagonal recurrence. Table covers 0..max_n.
std::vector<mpz_class> partition_function_table(int max_n);
mpz_class partition_function(int n);

// e^{c sqrt(n)} / n^{3/4} with c = 2 sqrt(zeta(2)) = pi sqrt(2/3).
double partition_function_upper_bound(int n);
double partition_bound_exponent_c();

// Certified check p(n) < e^{c sqrt(n)} / n^{3/4}: compares the exact value
// against a directed-rounding lower bound of the right side.
bool partition_bound_holds(int n, const mpz_class& p_n);

// Integer partitions of n with every part in [min_part, n], parts
// non-increasing.
std::vector<std::vector<int>> enumerate_integer_partitions(int n,
                                                           int min_part = 1);

std::vector<PartitionType> enumerate_types(int n);

// Text format: blocks joined by '|', elements by ',', e.g. "1,3|2|4".
SetPartition parse_partition(const std::string& text);
std::string format_partition(const SetPartition& p);

// Type format: "3,1,1".
PartitionType parse_type(const std::string& text);
std::string format_type(const PartitionType& t);

}  // namespace superortho
