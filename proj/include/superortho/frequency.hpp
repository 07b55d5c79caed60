#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superortho {

// Thrown when a brute-force search would exceed its explicit budget. A pruned
// search could falsely certify avoidance, so the search refuses instead.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer frequency vector in Z^N; stands for the character e^{2 pi i C.x}.
using FrequencyVector = std::vector<mpz_class>;

// Family members are addressed by index; duplicate values are permitted
// (the construction below uses two copies of one subfamily).
struct FrequencyFamily {
    int N = 0;
    std::vector<FrequencyVector> freqs;

    int size() const { return static_cast<int>(freqs.size()); }
};

// True iff the alternating signed frequency sum of the tuple is nonzero,
// i.e. the integral of the corresponding 2r-fold character product vanishes.
bool tuple_vanishes(const FrequencyFamily& fam, const std::vector<int>& idx);

struct STypeResult {
    bool pass = true;
    std::vector<int> violation;  // full 2r-tuple of member indices, if any
};

// Brute-force s-Type IV check: head indices l_1..l_{2r-2s} and tail odd
// indices all distinct, tail slots paired. Passes iff every matching tuple
// vanishes.
STypeResult check_s_type_iv(const FrequencyFamily& fam, int r, int s,
                            long long budget = 10'000'000);

// Indices into the searched value list; sum over ys equals sum over zs and
// all t1 + t2 values are pairwise distinct.
struct AdditiveStructure {
    std::vector<int> ys;
    std::vector<int> zs;
    FrequencyVector common_sum;
};

// Exhaustive search over distinct frequency values for a (t1,t2)-additive
// structure; nullopt certifies avoidance within the stated budget.
std::optional<AdditiveStructure> find_additive_structure(
    const std::vector<FrequencyVector>& values, int t1, int t2,
    long long budget = 100'000'000);

// The torus character family of the s0-Type IV construction: axis subfamilies
// A_k for r-s0 < k <= N plus two copies of the lacunary base set on axis 1.
FrequencyFamily build_example_family(int r, int s0, int N);

// Both sides of the per-axis identity
// sum_{j<k} 2^{k+j} + (2^{2k} + 2^k - 1) = sum_{j<=k} (2^{k+j} + 2^{k-j}).
bool kth_coord_identity_holds(int k);

std::vector<FrequencyVector> distinct_values(const FrequencyFamily& fam);

// Number of distinct values occurring in the family more than once.
int duplicated_value_count(const FrequencyFamily& fam);

struct ExamplePropertyEntry {
    int t = 0;
    bool expected_exists = false;
    bool via_duplicates = false;
    bool found_by_search = false;
    std::optional<AdditiveStructure> witness;

    bool found() const { return via_duplicates || found_by_search; }
};

struct ExamplePropertyReport {
    int r = 0;
    int s0 = 0;
    int N = 0;
    std::vector<ExamplePropertyEntry> entries;
    bool ok = true;  // every entry matches its expectation
};

// For each t in [r], reports whether a (t,t)-additive structure exists and
// compares with the construction's claim: existence for every t != r - s0,
// avoidance at t = r - s0. Structures for small t come from the duplicated
// subfamily (two members with equal frequency values).
ExamplePropertyReport verify_example_properties(
    int r, int s0, int N, long long budget = 100'000'000);

std::string format_frequency(const FrequencyVector& v);

}  // namespace superortho
