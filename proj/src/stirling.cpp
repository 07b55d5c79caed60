#include "superortho/stirling.hpp"

#include <stdexcept>

#include "superortho/partition.hpp"

namespace superortho {

StirlingTable::StirlingTable(int max_n) : max_n_(max_n) {
    if (max_n < 1) throw std::domain_error("StirlingTable: max_n < 1");
    rows_.resize(static_cast<size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        auto& row = rows_[static_cast<size_t>(n - 1)];
        row.resize(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) {
            if (k == 1 || k == n) {
                row[static_cast<size_t>(k - 1)] = 1;
            } else {
                const auto& prev = rows_[static_cast<size_t>(n - 2)];
                row[static_cast<size_t>(k - 1)] =
                    k * prev[static_cast<size_t>(k - 1)] +
                    prev[static_cast<size_t>(k - 2)];
            }
        }
    }
}

const mpz_class& StirlingTable::at(int n, int k) const {
    if (n < 1 || n > max_n_ || k < 1 || k > n)
        throw std::domain_error("StirlingTable::at: index out of range");
    return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)];
}

mpz_class stirling2(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::domain_error("stirling2: require 1 <= k <= n");
    return StirlingTable(n).at(n, k);
}

mpq_class falling_factorial(const mpq_class& x, int n) {
    if (n < 1) throw std::domain_error("falling_factorial: n < 1");
    mpq_class product = 1;
    for (int i = 0; i < n; ++i) product *= x - i;
    return product;
}

bool verify_factorial_identity(int n, const std::vector<mpq_class>& xs) {
    if (n < 1) throw std::domain_error("verify_factorial_identity: n < 1");
    StirlingTable table(n);
    for (const mpq_class& x : xs) {
        mpq_class lhs = 0;
        for (int k = 1; k <= n; ++k)
            lhs += mpq_class(table.at(n, k)) * falling_factorial(x, k);
        mpq_class rhs = 1;
        for (int i = 0; i < n; ++i) rhs *= x;
        if (lhs != rhs) return false;
    }
    return true;
}

mpz_class verify_alternating_identity(int n) {
    if (n < 1) throw std::domain_error("verify_alternating_identity: n < 1");
    StirlingTable table(n);
    mpz_class sum = 0;
    for (int k = 1; k <= n; ++k) {
        mpz_class term = table.at(n, k) * factorial(k - 1);
        if (k % 2)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

void write_stirling_csv(std::ostream& os, int max_n) {
    StirlingTable table(max_n);
    os << "n,k,s\n";
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            os << n << ',' << k << ',' << table.at(n, k).get_str() << '\n';
}

}  // namespace superortho
