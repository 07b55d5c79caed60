#include "superortho/identity.hpp"

#include <random>
#include <stdexcept>

#include "superortho/chain.hpp"

namespace superortho {

std::string GaussianRational::to_string() const {
    std::string out = re.get_str();
    if (im != 0) {
        if (im > 0) out += '+';
        out += im.get_str() + "i";
    }
    return out;
}

namespace {

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

void check_dims(const ScalarFamily& fam, const SetPartition& p) {
    if (fam.n != p.n())
        throw std::domain_error("scalar family / partition slot mismatch");
    if (static_cast<int>(fam.values.size()) != fam.n)
        throw std::domain_error("scalar family: inconsistent dimensions");
    for (const auto& row : fam.values)
        if (static_cast<int>(row.size()) != fam.L)
            throw std::domain_error("scalar family: inconsistent dimensions");
}

GaussianRational slot_value(const ScalarFamily& fam,
                            const ConjugationPattern& pat, int slot,
                            int label) {
    const GaussianRational& v = fam.at(slot, label);
    return pat.flags[static_cast<size_t>(slot)] ? v.conj() : v;
}

}  // namespace

ScalarFamily ScalarFamily::random(int n, int L, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ScalarFamily fam;
    fam.n = n;
    fam.L = L;
    fam.values.resize(static_cast<size_t>(n));
    for (auto& row : fam.values) {
        row.reserve(static_cast<size_t>(L));
        for (int l = 0; l < L; ++l) {
            mpq_class re = random_rational(rng);
            mpq_class im = random_rational(rng);
            row.emplace_back(std::move(re), std::move(im));
        }
    }
    return fam;
}

ScalarFamily ScalarFamily::constant(int n, int L,
                                    const GaussianRational& value) {
    ScalarFamily fam;
    fam.n = n;
    fam.L = L;
    fam.values.assign(
        static_cast<size_t>(n),
        std::vector<GaussianRational>(static_cast<size_t>(L), value));
    return fam;
}

std::vector<std::pair<SetPartition, mpz_class>> coarsening_coefficients(
    const SetPartition& p1) {
    std::vector<std::pair<SetPartition, mpz_class>> out;
    for (SetPartition& q : enumerate_coarsenings(p1)) {
        mpz_class d = (p1.n() <= kMaxChainN) ? count_chains(p1, q).d
                                             : d_general(p1, q).value;
        out.emplace_back(std::move(q), std::move(d));
    }
    return out;
}

namespace {

GaussianRational distinct_sum_rec(const ScalarFamily& fam,
                                  const ConjugationPattern& pat,
                                  const SetPartition& p1, size_t block,
                                  std::vector<bool>& used) {
    if (block == p1.blocks().size()) return {mpq_class(1), mpq_class(0)};
    GaussianRational total;
    for (int l = 0; l < fam.L; ++l) {
        if (used[static_cast<size_t>(l)]) continue;
        GaussianRational term{mpq_class(1), mpq_class(0)};
        for (int j : p1.blocks()[block])
            term = term * slot_value(fam, pat, j - 1, l);
        used[static_cast<size_t>(l)] = true;
        total += term * distinct_sum_rec(fam, pat, p1, block + 1, used);
        used[static_cast<size_t>(l)] = false;
    }
    return total;
}

}  // namespace

GaussianRational distinct_sum(const ScalarFamily& fam,
                              const ConjugationPattern& pat,
                              const SetPartition& p1) {
    check_dims(fam, p1);
    std::vector<bool> used(static_cast<size_t>(fam.L), false);
    return distinct_sum_rec(fam, pat, p1, 0, used);
}

GaussianRational independent_sum(const ScalarFamily& fam,
                                 const ConjugationPattern& pat,
                                 const SetPartition& p) {
    check_dims(fam, p);
    GaussianRational product{mpq_class(1), mpq_class(0)};
    for (const auto& block : p.blocks()) {
        GaussianRational block_sum;
        for (int l = 0; l < fam.L; ++l) {
            GaussianRational term{mpq_class(1), mpq_class(0)};
            for (int j : block) term = term * slot_value(fam, pat, j - 1, l);
            block_sum += term;
        }
        product = product * block_sum;
    }
    return product;
}

GaussianRational independent_sum_naive(const ScalarFamily& fam,
                                       const ConjugationPattern& pat,
                                       const SetPartition& p) {
    check_dims(fam, p);
    const int m = p.block_count();
    std::vector<int> labels(static_cast<size_t>(m), 0);
    GaussianRational total;
    for (;;) {
        GaussianRational term{mpq_class(1), mpq_class(0)};
        for (int j = 1; j <= p.n(); ++j)
            term = term * slot_value(
                              fam, pat, j - 1,
                              labels[static_cast<size_t>(p.block_of(j))]);
        total += term;
        int i = 0;
        while (i < m && labels[static_cast<size_t>(i)] == fam.L - 1)
            labels[static_cast<size_t>(i++)] = 0;
        if (i == m) break;
        ++labels[static_cast<size_t>(i)];
    }
    return total;
}

GaussianRational weighted_rhs(const ScalarFamily& fam,
                              const ConjugationPattern& pat,
                              const SetPartition& p1) {
    check_dims(fam, p1);
    GaussianRational total;
    for (const auto& [q, d] : coarsening_coefficients(p1))
        total += d * independent_sum(fam, pat, q);
    return total;
}

bool verify_first_step(const ScalarFamily& fam, const ConjugationPattern& pat,
                       const SetPartition& p1) {
    GaussianRational rhs = independent_sum(fam, pat, p1);
    for (const SetPartition& p2 : enumerate_coarsenings(p1))
        if (!(p2 == p1)) rhs -= distinct_sum(fam, pat, p2);
    return distinct_sum(fam, pat, p1) == rhs;
}

IdentityReport verify_identity(int n, int L, const SetPartition& p1,
                               int trials, std::uint64_t seed) {
    if (n > 8 || L > 6)
        throw std::domain_error("verify_identity: n <= 8 and L <= 6 required");
    IdentityReport report;
    report.n = n;
    report.L = L;
    report.p1 = format_partition(p1);
    report.trials = trials;
    const auto coeffs = coarsening_coefficients(p1);
    const ConjugationPattern pat = ConjugationPattern::alternating(n);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        const ScalarFamily fam = ScalarFamily::random(n, L, trial_seed);
        const GaussianRational lhs = distinct_sum(fam, pat, p1);
        GaussianRational rhs;
        for (const auto& [q, d] : coeffs)
            rhs += d * independent_sum(fam, pat, q);
        if (!(lhs == rhs))
            report.failures.push_back(
                {trial_seed, lhs.to_string(), rhs.to_string()});
    }
    return report;
}

namespace {

size_t tensor_size(const std::vector<int>& shape) {
    size_t total = 1;
    for (int d : shape) total *= static_cast<size_t>(d);
    return total;
}

// Entry of the outer product at flattened index: product over slots of the
// chosen vector's coordinate along that axis.
void add_outer_product(TensorValue& acc, const VectorFamily& fam,
                       const std::vector<int>& labels_per_slot,
                       const mpz_class& weight) {
    const size_t total = acc.entries.size();
    std::vector<int> index(static_cast<size_t>(fam.n), 0);
    for (size_t flat = 0; flat < total; ++flat) {
        GaussianRational term{mpq_class(weight), mpq_class(0)};
        for (int j = 0; j < fam.n; ++j) {
            const auto& vec =
                fam.values[static_cast<size_t>(j)]
                          [static_cast<size_t>(labels_per_slot[
                              static_cast<size_t>(j)])];
            term = term * vec[static_cast<size_t>(index[static_cast<size_t>(j)])];
        }
        acc.entries[flat] += term;
        for (int j = fam.n - 1; j >= 0; --j) {
            auto& ix = index[static_cast<size_t>(j)];
            if (++ix < fam.dims[static_cast<size_t>(j)]) break;
            ix = 0;
        }
    }
}

TensorValue zero_tensor(const std::vector<int>& dims) {
    TensorValue t;
    t.shape = dims;
    t.entries.assign(tensor_size(dims), GaussianRational{});
    return t;
}

void tensor_labels_rec(const VectorFamily& fam, const SetPartition& p,
                       size_t block, std::vector<bool>& used, bool injective,
                       std::vector<int>& slot_labels, const mpz_class& weight,
                       TensorValue& acc) {
    if (block == p.blocks().size()) {
        add_outer_product(acc, fam, slot_labels, weight);
        return;
    }
    for (int l = 0; l < fam.L; ++l) {
        if (injective && used[static_cast<size_t>(l)]) continue;
        for (int j : p.blocks()[block])
            slot_labels[static_cast<size_t>(j - 1)] = l;
        used[static_cast<size_t>(l)] = true;
        tensor_labels_rec(fam, p, block + 1, used, injective, slot_labels,
                          weight, acc);
        used[static_cast<size_t>(l)] = false;
    }
}

}  // namespace

VectorFamily VectorFamily::random(int n, int L, const std::vector<int>& dims,
                                  std::uint64_t seed) {
    if (static_cast<int>(dims.size()) != n)
        throw std::domain_error("VectorFamily: dims size mismatch");
    std::mt19937_64 rng(seed);
    VectorFamily fam;
    fam.n = n;
    fam.L = L;
    fam.dims = dims;
    fam.values.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        auto& slot = fam.values[static_cast<size_t>(j)];
        slot.resize(static_cast<size_t>(L));
        for (auto& vec : slot) {
            vec.reserve(static_cast<size_t>(dims[static_cast<size_t>(j)]));
            for (int i = 0; i < dims[static_cast<size_t>(j)]; ++i) {
                mpq_class re = random_rational(rng);
                mpq_class im = random_rational(rng);
                vec.emplace_back(std::move(re), std::move(im));
            }
        }
    }
    return fam;
}

TensorValue tensor_distinct_sum(const VectorFamily& fam,
                                const SetPartition& p1) {
    if (fam.n != p1.n())
        throw std::domain_error("tensor_distinct_sum: shape mismatch");
    TensorValue acc = zero_tensor(fam.dims);
    std::vector<bool> used(static_cast<size_t>(fam.L), false);
    std::vector<int> slot_labels(static_cast<size_t>(fam.n), 0);
    tensor_labels_rec(fam, p1, 0, used, /*injective=*/true, slot_labels,
                      mpz_class(1), acc);
    return acc;
}

TensorValue tensor_weighted_rhs(const VectorFamily& fam,
                                const SetPartition& p1) {
    if (fam.n != p1.n())
        throw std::domain_error("tensor_weighted_rhs: shape mismatch");
    TensorValue acc = zero_tensor(fam.dims);
    std::vector<bool> used(static_cast<size_t>(fam.L), false);
    std::vector<int> slot_labels(static_cast<size_t>(fam.n), 0);
    for (const auto& [q, d] : coarsening_coefficients(p1))
        tensor_labels_rec(fam, q, 0, used, /*injective=*/false, slot_labels, d,
                          acc);
    return acc;
}

IdentityReport verify_identity_tensor(int n, int L,
                                      const std::vector<int>& dims,
                                      std::uint64_t seed) {
    if (n > 4 || L > 3)
        throw std::domain_error(
            "verify_identity_tensor: n <= 4 and L <= 3 required");
    for (int d : dims)
        if (d < 1 || d > 3)
            throw std::domain_error(
                "verify_identity_tensor: axis dimensions must be in [1,3]");
    IdentityReport report;
    report.n = n;
    report.L = L;
    report.p1 = "all";
    report.trials = 1;
    const VectorFamily fam = VectorFamily::random(n, L, dims, seed);
    for (const SetPartition& p1 : enumerate_set_partitions(n)) {
        if (!(tensor_distinct_sum(fam, p1) == tensor_weighted_rhs(fam, p1)))
            report.failures.push_back(
                {seed, format_partition(p1), "tensor mismatch"});
    }
    return report;
}

}  // namespace superortho
