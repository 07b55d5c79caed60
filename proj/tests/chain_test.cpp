#include <map>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "superortho/chain.hpp"
#include "superortho/partition.hpp"

using namespace superortho;

TEST_CASE("single-element interval has one odd chain") {
    for (int n = 1; n <= 5; ++n) {
        const ChainStats stats =
            count_chains(SetPartition::top(n), SetPartition::top(n));
        CHECK(stats.odd == 1);
        CHECK(stats.even == 0);
        CHECK(stats.d == 1);
    }
}

TEST_CASE("chain counts on small intervals") {
    const ChainStats full3 =
        count_chains(SetPartition::singletons(3), SetPartition::top(3));
    CHECK(full3.odd == 3);
    CHECK(full3.even == 1);
    CHECK(full3.d == 2);

    const ChainStats pairs =
        count_chains(SetPartition::singletons(4), parse_partition("1,2|3,4"));
    CHECK(pairs.odd == 2);
    CHECK(pairs.even == 1);
    CHECK(pairs.d == 1);

    CHECK_THROWS_AS(
        count_chains(SetPartition::top(3), SetPartition::singletons(3)),
        std::domain_error);
    CHECK_THROWS_AS(count_chains(SetPartition::singletons(kMaxChainN + 1),
                                 SetPartition::top(kMaxChainN + 1)),
                    std::domain_error);
}

TEST_CASE("closed form values") {
    CHECK(d_closed_form(PartitionType({1, 1, 1})).value == 1);
    CHECK(d_closed_form(PartitionType({2})).value == -1);
    CHECK(d_closed_form(PartitionType({3})).value == 2);
    CHECK(d_closed_form(PartitionType({4})).value == -6);
    CHECK(d_closed_form(PartitionType({2, 2})).value == 1);
    CHECK(d_closed_form(PartitionType({3, 1})).value == 2);
    CHECK(d_closed_form(PartitionType({5})).value == 24);
    CHECK(d_closed_form(PartitionType({3, 2})).value == -2);
    CHECK(d_closed_form(PartitionType({2})).source == CoeffSource::closed_form);
    CHECK(to_string(CoeffSource::closed_form) == "closed-form");
    CHECK(to_string(CoeffSource::brute_force) == "brute-force");
}

TEST_CASE("closed form agrees with chain counting from the bottom") {
    for (int n = 1; n <= 6; ++n) {
        const SetPartition bottom = SetPartition::singletons(n);
        for_each_set_partition(n, [&](const SetPartition& p) {
            CHECK(count_chains(bottom, p).d ==
                  d_closed_form(partition_type(p)).value);
        });
    }
}

TEST_CASE("recursion agrees with closed form for every type") {
    for (int n = 1; n <= 10; ++n)
        for (const PartitionType& t : enumerate_types(n)) {
            const CoefficientValue rec = d_recursion(t);
            CHECK(rec.value == d_closed_form(t).value);
            CHECK(rec.source == CoeffSource::recursion);
        }
    CHECK(d_recursion(PartitionType({2})).value == -1);
    CHECK(d_recursion(PartitionType({3})).value == 2);
    CHECK(d_recursion(PartitionType({1, 1, 1, 1})).value == 1);
}

TEST_CASE("good-pair sign shortcut") {
    const SetPartition bottom = SetPartition::singletons(2);
    const CoefficientValue v = d_good_pair(bottom, SetPartition::top(2));
    CHECK(v.value == -1);
    CHECK(v.source == CoeffSource::good_pair);

    CHECK_THROWS_AS(
        d_good_pair(SetPartition::singletons(3), SetPartition::top(3)),
        std::domain_error);
    CHECK_THROWS_AS(d_good_pair(SetPartition::top(2), bottom),
                    std::domain_error);

    for (int n = 2; n <= 6; ++n) {
        const auto all = enumerate_set_partitions(n);
        auto good = [](const SetPartition& p) {
            for (const auto& b : p.blocks())
                if (b.size() > 2) return false;
            return true;
        };
        for (const SetPartition& p1 : all) {
            if (!good(p1)) continue;
            for (const SetPartition& p2 : enumerate_coarsenings(p1)) {
                if (!good(p2)) continue;
                CHECK(d_good_pair(p1, p2).value == count_chains(p1, p2).d);
            }
        }
    }
}

TEST_CASE("general pairs via block quotients") {
    CHECK(d_general(SetPartition::singletons(4), SetPartition::top(4)).value ==
          -6);
    CHECK(d_general(parse_partition("1,2|3|4"), parse_partition("1,2,3|4"))
              .value == -1);
    CHECK(d_general(parse_partition("1,2|3,4"), parse_partition("1,2,3,4"))
              .value == -1);
    CHECK_THROWS_AS(d_general(SetPartition::top(3), SetPartition::singletons(3)),
                    std::domain_error);

    for (int n = 1; n <= 6; ++n)
        for (const SetPartition& p1 : enumerate_set_partitions(n))
            for (const SetPartition& p2 : enumerate_coarsenings(p1))
                CHECK(d_general(p1, p2).value == count_chains(p1, p2).d);
}

TEST_CASE("block-graded sums reproduce signed Stirling numbers") {
    for (int n = 1; n <= 8; ++n) {
        const auto row = oracles::signed_stirling_first_row(n);
        std::vector<mpz_class> sums(static_cast<size_t>(n) + 1);
        for (const PartitionType& t : enumerate_types(n))
            sums[static_cast<size_t>(t.block_count())] +=
                count_partitions_of_type(t) * d_closed_form(t).value;
        for (int k = 1; k <= n; ++k)
            CHECK(sums[static_cast<size_t>(k)] == row[static_cast<size_t>(k)]);
    }
}
