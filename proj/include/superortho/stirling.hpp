#pragma once

#include <gmpxx.h>

#include <ostream>
#include <vector>

namespace superortho {

// Triangular table of Stirling numbers of the second kind, 1 <= k <= n.
class StirlingTable {
public:
    explicit StirlingTable(int max_n);

    int max_n() const { return max_n_; }
    const mpz_class& at(int n, int k) const;

private:
    int max_n_;
    std::vector<std::vector<mpz_class>> rows_;  // rows_[n-1][k-1]
};

mpz_class stirling2(int n, int k);

// [x]_(n) = x (x-1) ... (x-n+1).
mpq_class falling_factorial(const mpq_class& x, int n);

// Checks sum_k S(n,k) [x]_(k) = x^n exactly at every sample point.
bool verify_factorial_identity(int n, const std::vector<mpq_class>& xs);

// sum_k S(n,k) (-1)^{k-1} (k-1)!. Zero for n >= 2, one for n = 1.
mpz_class verify_alternating_identity(int n);

// CSV rows "n,k,s" for the triangle up to max_n.
void write_stirling_csv(std::ostream& os, int max_n);

}  // namespace superortho
