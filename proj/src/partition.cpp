#include "superortho/partition.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace superortho {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n <= 0) throw std::domain_error("SetPartition: n must be positive");
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (auto& block : blocks_) {
        if (block.empty())
            throw std::domain_error("SetPartition: empty block");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 1 || e > n)
                throw std::domain_error("SetPartition: element out of range");
            if (seen[static_cast<size_t>(e - 1)]++)
                throw std::domain_error("SetPartition: duplicate element");
        }
    }
    for (int c : seen)
        if (!c) throw std::domain_error("SetPartition: missing element");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    block_index_.assign(static_cast<size_t>(n), -1);
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (int e : blocks_[b])
            block_index_[static_cast<size_t>(e - 1)] = static_cast<int>(b);
}

SetPartition SetPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::top(int n) {
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;
    return SetPartition(n, {all});
}

int SetPartition::block_of(int element) const {
    if (element < 1 || element > n_)
        throw std::domain_error("block_of: element out of range");
    return block_index_[static_cast<size_t>(element - 1)];
}

bool SetPartition::operator<(const SetPartition& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return blocks_ < other.blocks_;
}

PartitionType::PartitionType(std::vector<int> s) : sizes(std::move(s)) {
    for (int v : sizes) {
        if (v < 1) throw std::domain_error("PartitionType: size < 1");
        n += v;
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    if (sizes.empty()) throw std::domain_error("PartitionType: empty");
}

namespace {

void partitions_rec(int n, int next, std::vector<std::vector<int>>& blocks,
                    const std::function<void(const SetPartition&)>& fn) {
    if (next > n) {
        fn(SetPartition(n, blocks));
        return;
    }
    // Indexed loop: deeper levels append a block, which may reallocate.
    const size_t existing = blocks.size();
    for (size_t b = 0; b < existing; ++b) {
        blocks[b].push_back(next);
        partitions_rec(n, next + 1, blocks, fn);
        blocks[b].pop_back();
    }
    blocks.push_back({next});
    partitions_rec(n, next + 1, blocks, fn);
    blocks.pop_back();
}

}  // namespace

void for_each_set_partition(
    int n, const std::function<void(const SetPartition&)>& fn) {
    if (n < 1 || n > kMaxEnumerationN)
        throw std::domain_error("for_each_set_partition: n out of [1,12]");
    std::vector<std::vector<int>> blocks;
    partitions_rec(n, 1, blocks, fn);
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

bool refines(const SetPartition& p1, const SetPartition& p2) {
    if (p1.n() != p2.n())
        throw std::domain_error("refines: ground sets differ");
    for (const auto& block : p1.blocks()) {
        const int target = p2.block_of(block[0]);
        for (int e : block)
            if (p2.block_of(e) != target) return false;
    }
    return true;
}

PartitionType partition_type(const SetPartition& p) {
    std::vector<int> sizes;
    sizes.reserve(p.blocks().size());
    for (const auto& block : p.blocks())
        sizes.push_back(static_cast<int>(block.size()));
    return PartitionType(std::move(sizes));
}

std::vector<SetPartition> enumerate_coarsenings(const SetPartition& p) {
    const int m = p.block_count();
    if (p.n() > kMaxEnumerationN)
        throw std::domain_error("enumerate_coarsenings: n out of range");
    std::vector<SetPartition> out;
    for_each_set_partition(m, [&](const SetPartition& q) {
        std::vector<std::vector<int>> merged;
        merged.reserve(q.blocks().size());
        for (const auto& atoms : q.blocks()) {
            std::vector<int> block;
            for (int a : atoms) {
                const auto& src = p.blocks()[static_cast<size_t>(a - 1)];
                block.insert(block.end(), src.begin(), src.end());
            }
            merged.push_back(std::move(block));
        }
        out.emplace_back(p.n(), std::move(merged));
    });
    return out;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class count_partitions_of_type(const PartitionType& t) {
    mpz_class count = factorial(t.n);
    int run = 1;
    for (size_t i = 0; i < t.sizes.size(); ++i) {
        count /= factorial(t.sizes[i]);
        if (i + 1 < t.sizes.size() && t.sizes[i + 1] == t.sizes[i]) {
            ++run;
        } else {
            count /= factorial(run);
            run = 1;
        }
    }
    return count;
}

std::vector<mpz_class> partition_function_table(int max_n) {
    if (max_n < 0) throw std::domain_error("partition_function_table: n < 0");
    std::vector<mpz_class> p(static_cast<size_t>(max_n) + 1);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        mpz_class acc = 0;
        for (int k = 1;; ++k) {
            const long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
            const long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
            if (g1 > n) break;
            const mpz_class term1 = p[static_cast<size_t>(n - g1)];
            const mpz_class term2 =
                (g2 <= n) ? p[static_cast<size_t>(n - g2)] : mpz_class(0);
            if (k % 2)
                acc += term1 + term2;
            else
                acc -= term1 + term2;
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

mpz_class partition_function(int n) {
    if (n < 1) throw std::domain_error("partition_function: n < 1");
    return partition_function_table(n).back();
}

double partition_bound_exponent_c() {
    return std::numbers::pi * std::sqrt(2.0 / 3.0);
}

double partition_function_upper_bound(int n) {
    if (n < 1) throw std::domain_error("upper bound: n < 1");
    const double c = partition_bound_exponent_c();
    return std::exp(c * std::sqrt(static_cast<double>(n))) /
           std::pow(static_cast<double>(n), 0.75);
}

bool partition_bound_holds(int n, const mpz_class& p_n) {
    if (n < 1) throw std::domain_error("partition_bound_holds: n < 1");
    constexpr mpfr_prec_t prec = 128;
    mpfr_t c, t, num, den;
    mpfr_inits2(prec, c, t, num, den, static_cast<mpfr_ptr>(nullptr));
    // Lower bound of c = pi * sqrt(2/3).
    mpfr_const_pi(c, MPFR_RNDD);
    mpfr_set_ui(t, 2, MPFR_RNDD);
    mpfr_div_ui(t, t, 3, MPFR_RNDD);
    mpfr_sqrt(t, t, MPFR_RNDD);
    mpfr_mul(c, c, t, MPFR_RNDD);
    // Lower bound of e^{c sqrt(n)}.
    mpfr_sqrt_ui(t, static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_mul(num, c, t, MPFR_RNDD);
    mpfr_exp(num, num, MPFR_RNDD);
    // Upper bound of n^{3/4} = (n^3)^{1/4}.
    mpfr_set_ui(den, static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_pow_ui(den, den, 3, MPFR_RNDU);
    mpfr_rootn_ui(den, den, 4, MPFR_RNDU);
    mpfr_div(num, num, den, MPFR_RNDD);
    const bool holds = mpfr_cmp_z(num, p_n.get_mpz_t()) > 0;
    mpfr_clears(c, t, num, den, static_cast<mpfr_ptr>(nullptr));
    return holds;
}

namespace {

void integer_partitions_rec(int remaining, int max_part, int min_part,
                            std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= min_part; --part) {
        cur.push_back(part);
        integer_partitions_rec(remaining - part, part, min_part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_integer_partitions(int n,
                                                           int min_part) {
    if (n < 0 || min_part < 1)
        throw std::domain_error("enumerate_integer_partitions: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    integer_partitions_rec(n, n, min_part, cur, out);
    return out;
}

std::vector<PartitionType> enumerate_types(int n) {
    std::vector<PartitionType> out;
    for (auto& sizes : enumerate_integer_partitions(n))
        out.emplace_back(std::move(sizes));
    return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        size_t pos = 0;
        int value;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::domain_error("parse: invalid integer '" + item + "'");
        }
        if (pos != item.size())
            throw std::domain_error("parse: trailing characters in '" + item +
                                    "'");
        out.push_back(value);
    }
    if (out.empty()) throw std::domain_error("parse: empty list");
    return out;
}

}  // namespace

SetPartition parse_partition(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(text);
    std::string piece;
    int n = 0;
    while (std::getline(ss, piece, '|')) {
        blocks.push_back(parse_int_list(piece, ','));
        n += static_cast<int>(blocks.back().size());
    }
    if (blocks.empty()) throw std::domain_error("parse_partition: empty");
    // Constructor rejects duplicates and gaps (every element must be in [n]).
    return SetPartition(n, std::move(blocks));
}

std::string format_partition(const SetPartition& p) {
    std::string out;
    for (size_t b = 0; b < p.blocks().size(); ++b) {
        if (b) out += '|';
        const auto& block = p.blocks()[b];
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i]);
        }
    }
    return out;
}

PartitionType parse_type(const std::string& text) {
    return PartitionType(parse_int_list(text, ','));
}

std::string format_type(const PartitionType& t) {
    std::string out;
    for (size_t i = 0; i < t.sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.sizes[i]);
    }
    return out;
}

}  // namespace superortho
