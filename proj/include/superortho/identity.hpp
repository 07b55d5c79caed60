#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superortho/partition.hpp"

namespace superortho {

// Exact complex scalar with rational real and imaginary parts.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() = default;
    GaussianRational(mpq_class r, mpq_class i)
        : re(std::move(r)), im(std::move(i)) {}

    GaussianRational conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    std::string to_string() const;

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a,
                                      const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a,
                                      const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const mpz_class& c,
                                      const GaussianRational& a) {
        return {c * a.re, c * a.im};
    }
    bool operator==(const GaussianRational&) const = default;
};

// Which of the n slots are conjugated in the multilinear form.
struct ConjugationPattern {
    std::vector<bool> flags;

    static ConjugationPattern none(int n) {
        return {std::vector<bool>(static_cast<size_t>(n), false)};
    }
    // Conjugate every even (1-based) slot: v1 conj(v2) ... v_{2r-1} conj(v_2r).
    static ConjugationPattern alternating(int n) {
        std::vector<bool> flags(static_cast<size_t>(n), false);
        for (int j = 2; j <= n; j += 2) flags[static_cast<size_t>(j - 1)] = true;
        return {std::move(flags)};
    }
};

// n x L array of exact scalars: values[j][l] is slot j's l-th vector.
struct ScalarFamily {
    int n = 0;
    int L = 0;
    std::vector<std::vector<GaussianRational>> values;

    // Numerators in [-9,9], denominators in [1,9], deterministic per seed.
    static ScalarFamily random(int n, int L, std::uint64_t seed);
    static ScalarFamily constant(int n, int L, const GaussianRational& value);

    const GaussianRational& at(int slot, int label) const {
        return values[static_cast<size_t>(slot)][static_cast<size_t>(label)];
    }
};

// Coefficients D(p1, q) over all coarsenings q of p1. Chain enumeration is
// used where feasible, the validated quotient formula beyond.
std::vector<std::pair<SetPartition, mpz_class>> coarsening_coefficients(
    const SetPartition& p1);

// Sum over injective block-label assignments of prod_j v_{j, l_{p1(j)}}.
GaussianRational distinct_sum(const ScalarFamily& fam,
                              const ConjugationPattern& pat,
                              const SetPartition& p1);

// Unrestricted sum, factored as a product of per-block sums.
GaussianRational independent_sum(const ScalarFamily& fam,
                                 const ConjugationPattern& pat,
                                 const SetPartition& p);

// Same value by iterating the full L^{|p|} grid; test oracle for tiny cases.
GaussianRational independent_sum_naive(const ScalarFamily& fam,
                                       const ConjugationPattern& pat,
                                       const SetPartition& p);

// sum_{q >= p1} D(p1, q) * independent_sum(q).
GaussianRational weighted_rhs(const ScalarFamily& fam,
                              const ConjugationPattern& pat,
                              const SetPartition& p1);

// One-step replacement: distinct(p1) = independent(p1)
//                                      - sum_{p2 > p1} distinct(p2).
bool verify_first_step(const ScalarFamily& fam, const ConjugationPattern& pat,
                       const SetPartition& p1);

struct IdentityFailure {
    std::uint64_t seed = 0;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    int n = 0;
    int L = 0;
    std::string p1;
    int trials = 0;
    std::vector<IdentityFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Draws `trials` seeded random families and checks
// distinct_sum == weighted_rhs exactly. Trial i uses seed + i.
IdentityReport verify_identity(int n, int L, const SetPartition& p1,
                               int trials, std::uint64_t seed);

// Dense tensor over GaussianRational entries, row-major in `shape`.
struct TensorValue {
    std::vector<int> shape;
    std::vector<GaussianRational> entries;

    bool operator==(const TensorValue&) const = default;
};

// Vector family for the tensor form: slot j holds L vectors in F^{dims[j]}.
struct VectorFamily {
    int n = 0;
    int L = 0;
    std::vector<int> dims;
    // values[j][l][i]: component i of slot j's l-th vector.
    std::vector<std::vector<std::vector<GaussianRational>>> values;

    static VectorFamily random(int n, int L, const std::vector<int>& dims,
                               std::uint64_t seed);
};

TensorValue tensor_distinct_sum(const VectorFamily& fam,
                                const SetPartition& p1);
TensorValue tensor_weighted_rhs(const VectorFamily& fam,
                                const SetPartition& p1);

// Checks the tensor identity entrywise for every p1 of [n].
IdentityReport verify_identity_tensor(int n, int L,
                                      const std::vector<int>& dims,
                                      std::uint64_t seed);

}  // namespace superortho
