#include "zetamill/rationals.hpp"

#include <mutex>
#include <vector>

namespace zetamill {

namespace {

std::mutex table_mutex;

// Defining recurrence: sum_{j<=n} C(n+1,j) B_j = 0 for n >= 1.
std::vector<Rational>& bernoulli_table() {
    static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
    return table;
}

// Secant recurrence: sum_{k<=n} C(2n,2k) E_2k = 0 for n >= 1.
std::vector<Integer>& euler_table() {
    static std::vector<Integer> table{Integer(1)};
    return table;
}

}  // namespace

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

Rational bernoulli(long n) {
    if (n < 0) throw DomainError("bernoulli: n must be >= 0");
    std::lock_guard<std::mutex> lock(table_mutex);
    auto& table = bernoulli_table();
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        if (m % 2 == 1) {
            table.emplace_back(0);
            continue;
        }
        Rational acc(0);
        for (long j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * table[static_cast<size_t>(j)];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[static_cast<size_t>(n)];
}

Integer euler_number(long n) {
    if (n < 0) throw DomainError("euler_number: n must be >= 0");
    if (n % 2 == 1) return 0;
    std::lock_guard<std::mutex> lock(table_mutex);
    auto& table = euler_table();
    long want = n / 2;
    while (static_cast<long>(table.size()) <= want) {
        long m = static_cast<long>(table.size());
        Integer acc(0);
        for (long k = 0; k < m; ++k)
            acc += binomial(2 * m, 2 * k) * table[static_cast<size_t>(k)];
        table.push_back(-acc);
    }
    return table[static_cast<size_t>(want)];
}

Real rational_to_real(const Rational& q, long digits) {
    PrecisionScope scope(digits);
    Real num(numerator(q).str());
    Real den(denominator(q).str());
    return num / den;
}

Real bernoulli_real(long n, long digits) { return rational_to_real(bernoulli(n), digits); }

}  // namespace zetamill
