#include "superortho/constants.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "superortho/chain.hpp"

namespace superortho {

CoefficientVector compute_c_alphas(int n) {
    if (n < 2 || n % 2)
        throw std::domain_error("compute_c_alphas: n must be even, >= 2");
    if (n > 60) throw std::domain_error("compute_c_alphas: n > 60");
    CoefficientVector cv;
    cv.n = n;
    cv.c.assign(static_cast<size_t>(n - 1), mpz_class(0));
    for (int alpha = 0; alpha <= n - 2; ++alpha) {
        mpz_class total = 0;
        // Types with exactly alpha singletons: partitions of n - alpha into
        // parts >= 2, padded with alpha ones.
        for (auto sizes : enumerate_integer_partitions(n - alpha, 2)) {
            sizes.insert(sizes.end(), static_cast<size_t>(alpha), 1);
            const PartitionType type(std::move(sizes));
            total += count_partitions_of_type(type) *
                     abs(d_closed_form(type).value);
        }
        cv.c[static_cast<size_t>(alpha)] = std::move(total);
    }
    return cv;
}

mpq_class reciprocal_type_sum(int m) {
    if (m < 2 || m > 200)
        throw std::domain_error("reciprocal_type_sum: require 2 <= m <= 200");
    // f[v] after processing part sizes 2..j: sum over partitions of v into
    // parts in [2, j] of the product of reciprocals.
    std::vector<mpq_class> f(static_cast<size_t>(m) + 1, mpq_class(0));
    f[0] = 1;
    for (int part = 2; part <= m; ++part) {
        const mpq_class inv(1, part);
        for (int v = part; v <= m; ++v)
            f[static_cast<size_t>(v)] +=
                inv * f[static_cast<size_t>(v - part)];
    }
    return f[static_cast<size_t>(m)];
}

double k_constant() {
    return std::exp(std::numbers::pi / (3.0 * std::sqrt(10.0))) /
           std::pow(60.0, 7.0 / 240.0);
}

double k_constant_reference() {
    constexpr mpfr_prec_t prec = 256;
    mpfr_t k, t;
    mpfr_inits2(prec, k, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(k, MPFR_RNDN);
    mpfr_sqrt_ui(t, 10, MPFR_RNDN);
    mpfr_mul_ui(t, t, 3, MPFR_RNDN);
    mpfr_div(k, k, t, MPFR_RNDN);
    mpfr_exp(k, k, MPFR_RNDN);
    mpfr_set_ui(t, 7, MPFR_RNDN);
    mpfr_div_ui(t, t, 240, MPFR_RNDN);
    mpfr_ui_pow(t, 60, t, MPFR_RNDN);
    mpfr_div(k, k, t, MPFR_RNDN);
    const double out = mpfr_get_d(k, MPFR_RNDN);
    mpfr_clears(k, t, static_cast<mpfr_ptr>(nullptr));
    return out;
}

double paper_bound(int r) {
    if (r < 1) throw std::domain_error("paper_bound: r < 1");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return k_constant() * phi * 2.0 * static_cast<double>(r);
}

double prior_constant(int r) {
    if (r < 1) throw std::domain_error("prior_constant: r < 1");
    const mpz_class fac = factorial(2 * r) - 1;
    return std::sqrt(2.0 * fac.get_d());
}

namespace {

// Sign of t^n - sum_alpha C_alpha t^alpha at an exact rational point.
int poly_sign(const CoefficientVector& cv, const mpq_class& t) {
    std::vector<mpq_class> powers(static_cast<size_t>(cv.n) + 1);
    powers[0] = 1;
    for (int i = 1; i <= cv.n; ++i)
        powers[static_cast<size_t>(i)] = powers[static_cast<size_t>(i - 1)] * t;
    mpq_class sum = 0;
    for (int alpha = 0; alpha <= cv.n - 2; ++alpha)
        sum += mpq_class(cv.at(alpha)) * powers[static_cast<size_t>(alpha)];
    const mpq_class diff = powers[static_cast<size_t>(cv.n)] - sum;
    return sgn(diff);
}

}  // namespace

RootEnclosure exact_root_constant(int r) {
    if (r < 1 || r > 15)
        throw std::domain_error("exact_root_constant: require 1 <= r <= 15");
    const CoefficientVector cv = compute_c_alphas(2 * r);
    // Q has nonnegative coefficients and Q(0) = C_0 >= 1, so t^n - Q(t) has a
    // single sign change on (0, inf); it is negative at 0 and positive at 4r.
    mpq_class lo = 0;
    mpq_class hi = 4 * r;
    if (poly_sign(cv, hi) <= 0)
        throw std::logic_error("exact_root_constant: no sign change at 4r");
    const mpq_class width_target(1, 1000000000);
    while (hi - lo > width_target) {
        const mpq_class mid = (lo + hi) / 2;
        const int s = poly_sign(cv, mid);
        if (s == 0) {
            // Exact root hit; collapse to a degenerate enclosure.
            lo = mid;
            hi = mid;
            break;
        }
        if (s < 0)
            lo = mid;
        else
            hi = mid;
    }
    return RootEnclosure{lo, hi};
}

CoeffBoundReport verify_coeff_root_bounds(int n) {
    const CoefficientVector cv = compute_c_alphas(n);
    CoeffBoundReport report;
    report.n = n;
    for (int alpha = 0; alpha <= n - 2; ++alpha) {
        CoeffBoundEntry entry;
        entry.alpha = alpha;
        entry.c_alpha = cv.at(alpha);
        entry.exact_branch = (n - alpha) < 60;
        if (entry.exact_branch) {
            mpz_class bound;
            mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(n - alpha));
            entry.holds = entry.c_alpha < bound;
            if (!entry.holds) report.all_exact_hold = false;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

bool golden_ratio_dominates(const mpq_class& s, int max_n) {
    if (s <= 1) throw std::domain_error("golden_ratio_dominates: s <= 1");
    mpq_class power = s * s;  // s^m
    mpq_class geom = 1;       // sum_{alpha=0}^{m-2} s^alpha
    mpq_class top = 1;        // s^{m-2}
    for (int m = 2; m <= max_n; ++m) {
        if (!(power > geom)) return false;
        power *= s;
        top *= s;
        geom += top;
    }
    return true;
}

ConstantReport make_constant_report(int r) {
    ConstantReport report;
    report.r = r;
    report.c_alphas = compute_c_alphas(2 * r).c;
    const RootEnclosure root = exact_root_constant(r);
    report.root_lo = root.lo.get_d();
    report.root_hi = root.hi.get_d();
    report.paper_bound = paper_bound(r);
    report.prior_bound = prior_constant(r);
    report.k_const = k_constant();
    return report;
}

}  // namespace superortho
