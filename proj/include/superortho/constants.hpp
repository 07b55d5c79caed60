#pragma once

#include <gmpxx.h>

#include <vector>

#include "superortho/partition.hpp"

namespace superortho {

// Exact coefficients of Q(t): c[alpha] = sum over partitions P > P0 with
// exactly alpha singleton blocks of |D(P)|, 0 <= alpha <= n-2.
struct CoefficientVector {
    int n = 0;
    std::vector<mpz_class> c;  // indexed by alpha

    const mpz_class& at(int alpha) const { return c[static_cast<size_t>(alpha)]; }
};

// Exact C_alpha via type enumeration and the closed form. n even, <= 60.
CoefficientVector compute_c_alphas(int n);

// Exact rational sum over integer partitions of m into parts >= 2 of the
// product of reciprocals of the parts. 2 <= m <= 200.
mpq_class reciprocal_type_sum(int m);

// K = e^{pi / (3 sqrt(10))} / 60^{7/240}.
double k_constant();
// Same constant through 256-bit directed-precision arithmetic; reference for
// the 12-digit check.
double k_constant_reference();

// K * (1 + sqrt(5)) / 2 * 2r.
double paper_bound(int r);

// sqrt(2 ((2r)! - 1)) with the factorial exact before the square root.
double prior_constant(int r);

// Rational enclosure [lo, hi] of the largest real root of
// t^{2r} - sum_alpha C_alpha t^alpha, width <= 1e-9, signs evaluated exactly.
struct RootEnclosure {
    mpq_class lo;
    mpq_class hi;
};

RootEnclosure exact_root_constant(int r);

struct CoeffBoundEntry {
    int alpha = 0;
    mpz_class c_alpha;
    bool exact_branch = false;  // n - alpha < 60: exact comparison applies
    bool holds = false;         // C_alpha < n^{n-alpha} (exact branch only)
};

struct CoeffBoundReport {
    int n = 0;
    std::vector<CoeffBoundEntry> entries;
    bool all_exact_hold = true;
};

// Checks C_alpha < n^{n-alpha} exactly wherever n - alpha < 60; entries with
// n - alpha >= 60 are reported against the K*n branch without assertion.
CoeffBoundReport verify_coeff_root_bounds(int n);

// s^m > sum_{alpha <= m-2} s^alpha for all 2 <= m <= max_n, exact arithmetic.
// Mirrors the induction step that forces s^2 <= s + 1 at the optimum.
bool golden_ratio_dominates(const mpq_class& s, int max_n);

struct ConstantReport {
    int r = 0;
    std::vector<mpz_class> c_alphas;
    double root_lo = 0;
    double root_hi = 0;
    double paper_bound = 0;
    double prior_bound = 0;
    double k_const = 0;
};

ConstantReport make_constant_report(int r);

}  // namespace superortho
