#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "superortho/chain.hpp"
#include "superortho/identity.hpp"
#include "superortho/partition.hpp"
#include "superortho/stirling.hpp"

using namespace superortho;

namespace {

ScalarFamily real_family(int n, int L, std::uint64_t seed) {
    ScalarFamily fam = ScalarFamily::random(n, L, seed);
    for (auto& row : fam.values)
        for (auto& v : row) v.im = 0;
    return fam;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    const GaussianRational a{mpq_class(1, 2), mpq_class(3)};
    const GaussianRational b{mpq_class(2), mpq_class(-1)};
    CHECK((a + b) == GaussianRational{mpq_class(5, 2), mpq_class(2)});
    CHECK((a * b) == GaussianRational{mpq_class(4), mpq_class(11, 2)});
    CHECK(a.conj() == GaussianRational{mpq_class(1, 2), mpq_class(-3)});
    CHECK((mpz_class(3) * a) ==
          GaussianRational{mpq_class(3, 2), mpq_class(9)});
    CHECK(GaussianRational{}.is_zero());
    CHECK(a.to_string() == "1/2+3i");
    CHECK(GaussianRational{mpq_class(-2), mpq_class(-1)}.to_string() == "-2-1i");
}

TEST_CASE("conjugation patterns") {
    const ConjugationPattern pat = ConjugationPattern::alternating(4);
    CHECK(pat.flags == std::vector<bool>{false, true, false, true});
    CHECK(ConjugationPattern::none(3).flags ==
          std::vector<bool>{false, false, false});
}

TEST_CASE("random scalar families are seeded and bounded") {
    const ScalarFamily a = ScalarFamily::random(3, 4, 7);
    const ScalarFamily b = ScalarFamily::random(3, 4, 7);
    const ScalarFamily c = ScalarFamily::random(3, 4, 8);
    CHECK(a.values == b.values);
    CHECK(a.values != c.values);
    for (const auto& row : a.values)
        for (const auto& v : row) {
            CHECK(abs(v.re) <= 9);
            CHECK(abs(v.im) <= 9);
        }
}

TEST_CASE("coarsening coefficients match chain counts") {
    for (int n = 1; n <= 5; ++n)
        for (const SetPartition& p1 : enumerate_set_partitions(n))
            for (const auto& [q, d] : coarsening_coefficients(p1))
                CHECK(d == count_chains(p1, q).d);
}

TEST_CASE("distinct sum degenerate cases") {
    const ConjugationPattern pat2 = ConjugationPattern::none(2);
    // One label cannot be assigned injectively to two blocks.
    CHECK(distinct_sum(ScalarFamily::random(2, 1, 3), pat2,
                       SetPartition::singletons(2))
              .is_zero());
    // All-ones family: the distinct sum counts injective assignments.
    const GaussianRational one{mpq_class(1), mpq_class(0)};
    for (int L = 1; L <= 6; ++L)
        for (int n = 1; n <= 5; ++n) {
            const ScalarFamily ones = ScalarFamily::constant(n, L, one);
            for (const SetPartition& p1 : enumerate_set_partitions(n)) {
                const GaussianRational v =
                    distinct_sum(ones, ConjugationPattern::none(n), p1);
                CHECK(v.im == 0);
                CHECK(v.re == falling_factorial(L, p1.block_count()));
            }
        }
    CHECK_THROWS_AS(distinct_sum(ScalarFamily::random(3, 2, 1), pat2,
                                 SetPartition::singletons(2)),
                    std::domain_error);
}

TEST_CASE("distinct sum matches the literal grid definition") {
    for (int n = 1; n <= 4; ++n)
        for (int L = 1; L <= 4; ++L)
            for (std::uint64_t seed : {1ull, 99ull}) {
                const ScalarFamily fam = ScalarFamily::random(n, L, seed);
                for (const ConjugationPattern& pat :
                     {ConjugationPattern::none(n),
                      ConjugationPattern::alternating(n)})
                    for (const SetPartition& p1 : enumerate_set_partitions(n))
                        CHECK(distinct_sum(fam, pat, p1) ==
                              oracles::brute_distinct_sum(fam, pat, p1));
            }
}

TEST_CASE("factored independent sum equals the naive grid") {
    for (int n = 1; n <= 4; ++n)
        for (int L = 1; L <= 3; ++L) {
            const ScalarFamily fam = ScalarFamily::random(n, L, 17);
            const ConjugationPattern pat = ConjugationPattern::alternating(n);
            for (const SetPartition& p : enumerate_set_partitions(n))
                CHECK(independent_sum(fam, pat, p) ==
                      independent_sum_naive(fam, pat, p));
        }
    // All-ones family gives L^{block count}.
    const ScalarFamily ones =
        ScalarFamily::constant(4, 5, {mpq_class(1), mpq_class(0)});
    CHECK(independent_sum(ones, ConjugationPattern::none(4),
                          parse_partition("1,2|3,4"))
              .re == 25);
}

TEST_CASE("identity holds for random families under both patterns") {
    for (int n = 1; n <= 4; ++n)
        for (int L = 2; L <= 3; ++L)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const ScalarFamily fam = ScalarFamily::random(n, L, seed);
                for (const ConjugationPattern& pat :
                     {ConjugationPattern::none(n),
                      ConjugationPattern::alternating(n)})
                    for (const SetPartition& p1 : enumerate_set_partitions(n))
                        CHECK(distinct_sum(fam, pat, p1) ==
                              weighted_rhs(fam, pat, p1));
            }
}

TEST_CASE("conjugation is coherent on real families") {
    for (int n = 1; n <= 4; ++n) {
        const ScalarFamily fam = real_family(n, 3, 23);
        for (const SetPartition& p1 : enumerate_set_partitions(n)) {
            CHECK(distinct_sum(fam, ConjugationPattern::none(n), p1) ==
                  distinct_sum(fam, ConjugationPattern::alternating(n), p1));
            CHECK(weighted_rhs(fam, ConjugationPattern::none(n), p1) ==
                  weighted_rhs(fam, ConjugationPattern::alternating(n), p1));
        }
    }
}

TEST_CASE("first-step replacement") {
    for (int n = 1; n <= 4; ++n) {
        const ScalarFamily fam = ScalarFamily::random(n, 3, 5);
        const ConjugationPattern pat = ConjugationPattern::alternating(n);
        for (const SetPartition& p1 : enumerate_set_partitions(n))
            CHECK(verify_first_step(fam, pat, p1));
    }
}

TEST_CASE("verify_identity driver") {
    const IdentityReport report =
        verify_identity(4, 3, SetPartition::singletons(4), 50, 2024);
    CHECK(report.ok());
    CHECK(report.n == 4);
    CHECK(report.L == 3);
    CHECK(report.trials == 50);
    CHECK(report.p1 == "1|2|3|4");
    CHECK(verify_identity(5, 2, parse_partition("1,3|2,5|4"), 10, 7).ok());
    CHECK_THROWS_AS(verify_identity(9, 2, SetPartition::singletons(9), 1, 0),
                    std::domain_error);
    CHECK_THROWS_AS(verify_identity(4, 7, SetPartition::singletons(4), 1, 0),
                    std::domain_error);
}

TEST_CASE("falling-factorial specialization of the coefficients") {
    // sum_q D(P0,q) L^{|q|} telescopes to [L]_(n); exercises the quotient
    // formula where chain enumeration is out of reach (n = 9).
    for (int n = 1; n <= 9; ++n) {
        const auto coeffs = coarsening_coefficients(SetPartition::singletons(n));
        for (int L = 1; L <= 8; ++L) {
            mpq_class total = 0;
            for (const auto& [q, d] : coeffs) {
                mpz_class power;
                mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(L),
                              static_cast<unsigned long>(q.block_count()));
                const mpz_class term = d * power;
                total += mpq_class(term);
            }
            CHECK(total == falling_factorial(L, n));
        }
    }
}

TEST_CASE("tensor identity") {
    CHECK(verify_identity_tensor(3, 2, {2, 1, 2}, 11).ok());
    CHECK(verify_identity_tensor(4, 3, {2, 2, 2, 2}, 5).ok());
    CHECK(verify_identity_tensor(1, 2, {3}, 1).ok());
    CHECK_THROWS_AS(verify_identity_tensor(5, 2, {1, 1, 1, 1, 1}, 0),
                    std::domain_error);
    CHECK_THROWS_AS(verify_identity_tensor(2, 2, {1, 4}, 0),
                    std::domain_error);
    CHECK_THROWS_AS(verify_identity_tensor(2, 2, {1}, 0), std::domain_error);
}

TEST_CASE("tensor sums reduce to scalars in dimension one") {
    const int n = 3;
    const ScalarFamily scalars = ScalarFamily::random(n, 3, 31);
    VectorFamily vectors;
    vectors.n = n;
    vectors.L = 3;
    vectors.dims.assign(static_cast<size_t>(n), 1);
    vectors.values.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < 3; ++l)
            vectors.values[static_cast<size_t>(j)].push_back(
                {scalars.at(j, l)});
    const ConjugationPattern none = ConjugationPattern::none(n);
    for (const SetPartition& p1 : enumerate_set_partitions(n)) {
        const TensorValue lhs = tensor_distinct_sum(vectors, p1);
        REQUIRE(lhs.entries.size() == 1);
        CHECK(lhs.entries[0] == distinct_sum(scalars, none, p1));
        const TensorValue rhs = tensor_weighted_rhs(vectors, p1);
        REQUIRE(rhs.entries.size() == 1);
        CHECK(rhs.entries[0] == weighted_rhs(scalars, none, p1));
    }
}
