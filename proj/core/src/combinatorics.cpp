#include "zeta2k/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace zeta2k {

namespace {

// Pascal triangle rows, each stored up to its midpoint (C(n,r) = C(n,n-r)).
// Rows live in a deque so previously built rows stay put while new ones grow.
class PascalCache {
public:
    BigInt at(long n, long r) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(n);
        return lookup(n, r);
    }

private:
    std::mutex mu_;
    std::deque<std::vector<BigInt>> rows_;

    const BigInt& lookup(long n, long r) const {
        long rr = std::min(r, n - r);
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(rr)];
    }

    void grow(long n) {
        while (static_cast<long>(rows_.size()) <= n) {
            long m = static_cast<long>(rows_.size());
            std::vector<BigInt> row(static_cast<std::size_t>(m / 2) + 1);
            row[0] = 1;
            for (long r = 1; r <= m / 2; ++r) {
                row[static_cast<std::size_t>(r)] =
                    lookup(m - 1, r - 1) + lookup(m - 1, r);
            }
            rows_.push_back(std::move(row));
        }
    }
};

PascalCache& pascal() {
    static PascalCache cache;
    return cache;
}

constexpr long kPascalLimit = 4096;

BigInt binomial_multiplicative(long n, long r) {
    r = std::min(r, n - r);
    BigInt acc = 1;
    for (long i = 1; i <= r; ++i) {
        acc *= BigInt(n - r + i);
        acc /= BigInt(i);
    }
    return acc;
}

}  // namespace

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

BigInt binomial(long n, long r) {
    if (n < 0) throw std::invalid_argument("binomial: negative row");
    if (r < 0 || r > n) return BigInt(0);
    if (n <= kPascalLimit) return pascal().at(n, r);
    return binomial_multiplicative(n, r);
}

BigInt trinomial(long n, long r1, long r2, long r3) {
    if (n < 0 || r1 < 0 || r2 < 0 || r3 < 0 || r1 + r2 + r3 != n)
        throw std::invalid_argument("trinomial: parts must be nonnegative and sum to n");
    return binomial(n, r1) * binomial(n - r1, r2);
}

}  // namespace zeta2k
