#include "superortho/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

namespace superortho {

bool tuple_vanishes(const FrequencyFamily& fam, const std::vector<int>& idx) {
    if (idx.size() % 2)
        throw std::domain_error("tuple_vanishes: tuple length must be even");
    FrequencyVector sum(static_cast<size_t>(fam.N), mpz_class(0));
    for (size_t pos = 0; pos < idx.size(); ++pos) {
        const int l = idx[pos];
        if (l < 0 || l >= fam.size())
            throw std::domain_error("tuple_vanishes: index out of range");
        const FrequencyVector& c = fam.freqs[static_cast<size_t>(l)];
        for (size_t i = 0; i < sum.size(); ++i) {
            if (pos % 2 == 0)
                sum[i] += c[i];
            else
                sum[i] -= c[i];
        }
    }
    return std::any_of(sum.begin(), sum.end(),
                       [](const mpz_class& v) { return v != 0; });
}

namespace {

// Ordered selections of `want` distinct member indices; returns true when a
// violating tuple has been found.
bool s_type_rec(const FrequencyFamily& fam, int r, int s, int want,
                std::vector<int>& chosen, std::vector<bool>& used,
                STypeResult& result) {
    if (static_cast<int>(chosen.size()) == want) {
        const int head = 2 * r - 2 * s;
        std::vector<int> tuple(static_cast<size_t>(2 * r));
        for (int i = 0; i < head; ++i)
            tuple[static_cast<size_t>(i)] = chosen[static_cast<size_t>(i)];
        for (int j = 0; j < s; ++j) {
            tuple[static_cast<size_t>(head + 2 * j)] =
                chosen[static_cast<size_t>(head + j)];
            tuple[static_cast<size_t>(head + 2 * j + 1)] =
                chosen[static_cast<size_t>(head + j)];
        }
        if (!tuple_vanishes(fam, tuple)) {
            result.pass = false;
            result.violation = std::move(tuple);
            return true;
        }
        return false;
    }
    for (int l = 0; l < fam.size(); ++l) {
        if (used[static_cast<size_t>(l)]) continue;
        used[static_cast<size_t>(l)] = true;
        chosen.push_back(l);
        const bool done = s_type_rec(fam, r, s, want, chosen, used, result);
        chosen.pop_back();
        used[static_cast<size_t>(l)] = false;
        if (done) return true;
    }
    return false;
}

}  // namespace

STypeResult check_s_type_iv(const FrequencyFamily& fam, int r, int s,
                            long long budget) {
    if (r < 1 || s < 0 || s > r)
        throw std::domain_error("check_s_type_iv: require 0 <= s <= r");
    const int want = 2 * r - s;  // distinct member indices per tuple
    double tuples = 1;
    for (int i = 0; i < want; ++i) tuples *= static_cast<double>(fam.size() - i);
    if (tuples > static_cast<double>(budget))
        throw ResourceError("check_s_type_iv: candidate tuple count " +
                            std::to_string(tuples) + " exceeds budget");
    STypeResult result;
    if (fam.size() < want) return result;  // vacuous pass
    std::vector<int> chosen;
    std::vector<bool> used(static_cast<size_t>(fam.size()), false);
    s_type_rec(fam, r, s, want, chosen, used, result);
    return result;
}

namespace {

FrequencyVector sum_of(const std::vector<FrequencyVector>& values,
                       const std::vector<int>& indices, size_t n_coords) {
    FrequencyVector sum(n_coords, mpz_class(0));
    for (int i : indices)
        for (size_t c = 0; c < n_coords; ++c)
            sum[c] += values[static_cast<size_t>(i)][c];
    return sum;
}

bool combinations_rec(int pool, int need, int start, std::vector<int>& cur,
                      const std::function<bool(const std::vector<int>&)>& fn) {
    if (need == 0) return fn(cur);
    for (int i = start; i <= pool - need; ++i) {
        cur.push_back(i);
        if (combinations_rec(pool, need - 1, i + 1, cur, fn)) return true;
        cur.pop_back();
    }
    return false;
}

double binomial_estimate(int n, int k) {
    double v = 1;
    for (int i = 0; i < k; ++i)
        v *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    return v;
}

}  // namespace

std::optional<AdditiveStructure> find_additive_structure(
    const std::vector<FrequencyVector>& values, int t1, int t2,
    long long budget) {
    if (t1 < 1 || t2 < 1)
        throw std::domain_error("find_additive_structure: t1, t2 >= 1");
    const int total = t1 + t2;
    if (total > static_cast<int>(values.size())) return std::nullopt;
    const double cost = binomial_estimate(static_cast<int>(values.size()),
                                          total) *
                        std::pow(2.0, total);
    if (cost > static_cast<double>(budget))
        throw ResourceError("find_additive_structure: search cost exceeds budget");
    const size_t n_coords = values.empty() ? 0 : values[0].size();
    std::optional<AdditiveStructure> found;
    std::vector<int> subset;
    combinations_rec(
        static_cast<int>(values.size()), total, 0, subset,
        [&](const std::vector<int>& chosen) {
            // Frequencies must be pairwise distinct as values.
            for (size_t a = 0; a < chosen.size(); ++a)
                for (size_t b = a + 1; b < chosen.size(); ++b)
                    if (values[static_cast<size_t>(chosen[a])] ==
                        values[static_cast<size_t>(chosen[b])])
                        return false;
            std::vector<int> split;
            return combinations_rec(
                total, t1, 0, split, [&](const std::vector<int>& y_pos) {
                    std::vector<int> ys, zs;
                    std::vector<bool> in_y(static_cast<size_t>(total), false);
                    for (int p : y_pos) in_y[static_cast<size_t>(p)] = true;
                    for (int p = 0; p < total; ++p) {
                        if (in_y[static_cast<size_t>(p)])
                            ys.push_back(chosen[static_cast<size_t>(p)]);
                        else
                            zs.push_back(chosen[static_cast<size_t>(p)]);
                    }
                    FrequencyVector y_sum = sum_of(values, ys, n_coords);
                    FrequencyVector z_sum = sum_of(values, zs, n_coords);
                    if (y_sum != z_sum) return false;
                    found = AdditiveStructure{std::move(ys), std::move(zs),
                                              std::move(y_sum)};
                    return true;
                });
        });
    return found;
}

namespace {

mpz_class pow2(int e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return v;
}

FrequencyVector axis_vector(int N, int axis, const mpz_class& value) {
    FrequencyVector v(static_cast<size_t>(N), mpz_class(0));
    v[static_cast<size_t>(axis - 1)] = value;
    return v;
}

}  // namespace

FrequencyFamily build_example_family(int r, int s0, int N) {
    if (r < 1) throw std::domain_error("build_example_family: r < 1");
    if (s0 < 0 || s0 >= r)
        throw std::domain_error("build_example_family: require 0 <= s0 <= r-1");
    if (N < r) throw std::domain_error("build_example_family: require N >= r");
    FrequencyFamily fam;
    fam.N = N;
    // Two copies of the lacunary base set on axis 1 (empty when r - s0 = 1).
    for (int copy = 0; copy < 2; ++copy)
        for (int j = 1; j <= r - s0 - 1; ++j)
            fam.freqs.push_back(axis_vector(N, 1, pow2(j)));
    // Axis subfamilies; every stated frequency carries the factor 2^k, so all
    // entries are integers: 2^j 2^k, (2^k + 1 - 2^{-k}) 2^k, (2^j + 2^{-j}) 2^k.
    for (int k = r - s0 + 1; k <= N; ++k) {
        for (int j = 1; j <= k - 1; ++j)
            fam.freqs.push_back(axis_vector(N, k, pow2(k + j)));
        fam.freqs.push_back(axis_vector(N, k, pow2(2 * k) + pow2(k) - 1));
        for (int j = 1; j <= k; ++j)
            fam.freqs.push_back(
                axis_vector(N, k, pow2(k + j) + pow2(k - j)));
    }
    return fam;
}

bool kth_coord_identity_holds(int k) {
    if (k < 1) throw std::domain_error("kth_coord_identity_holds: k < 1");
    mpz_class lhs = pow2(2 * k) + pow2(k) - 1;
    for (int j = 1; j <= k - 1; ++j) lhs += pow2(k + j);
    mpz_class rhs = 0;
    for (int j = 1; j <= k; ++j) rhs += pow2(k + j) + pow2(k - j);
    return lhs == rhs;
}

std::vector<FrequencyVector> distinct_values(const FrequencyFamily& fam) {
    std::vector<FrequencyVector> out;
    for (const FrequencyVector& v : fam.freqs)
        if (std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
    return out;
}

int duplicated_value_count(const FrequencyFamily& fam) {
    std::map<FrequencyVector, int> counts;
    for (const FrequencyVector& v : fam.freqs) ++counts[v];
    int dup = 0;
    for (const auto& [value, count] : counts)
        if (count > 1) ++dup;
    return dup;
}

ExamplePropertyReport verify_example_properties(int r, int s0, int N,
                                                long long budget) {
    ExamplePropertyReport report;
    report.r = r;
    report.s0 = s0;
    report.N = N;
    const FrequencyFamily fam = build_example_family(r, s0, N);
    const std::vector<FrequencyVector> values = distinct_values(fam);
    const int dup = duplicated_value_count(fam);
    for (int t = 1; t <= r; ++t) {
        ExamplePropertyEntry entry;
        entry.t = t;
        entry.expected_exists = (t != r - s0);
        // Two copies of the base set yield a (t,t)-structure with equal value
        // multisets on both sides for every t up to the duplicate count.
        entry.via_duplicates = (t <= dup);
        entry.witness = find_additive_structure(values, t, t, budget);
        entry.found_by_search = entry.witness.has_value();
        if (entry.found() != entry.expected_exists) report.ok = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string format_frequency(const FrequencyVector& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    out += ')';
    return out;
}

}  // namespace superortho
