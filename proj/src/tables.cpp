#include "partsym/tables.hpp"

#include <string>

namespace partsym {

namespace {

const BigInt& zero() {
    static const BigInt z = 0;
    return z;
}

void check_nonnegative(int k, const char* what) {
    if (k < 0) {
        throw RangeError(std::string(what) + " must be nonnegative, got " +
                         std::to_string(k));
    }
}

} // namespace

CombinatoricTables::CombinatoricTables(int cap) : cap_(cap) {
    if (cap < 0) throw RangeError("table cap must be nonnegative");

    // Bell numbers via the Peirce triangle, independent of the Stirling
    // table so the row-sum identity stays a real cross-check.
    bell_.resize(cap + 1);
    std::vector<BigInt> row{1};
    bell_[0] = 1;
    for (int k = 1; k <= cap; ++k) {
        std::vector<BigInt> next(row.size() + 1);
        next[0] = row.back();
        for (std::size_t i = 0; i < row.size(); ++i) next[i + 1] = next[i] + row[i];
        bell_[k] = next[0];
        row = std::move(next);
    }

    stirling2_.resize(cap + 1);
    stirling2_[0] = {1};
    for (int r = 1; r <= cap; ++r) {
        stirling2_[r].assign(r + 1, 0);
        for (int t = 1; t <= r; ++t) {
            stirling2_[r][t] = BigInt(t) * stirling2_[r - 1][t];
            if (t - 1 <= r - 1) stirling2_[r][t] += stirling2_[r - 1][t - 1];
        }
    }

    factorial_.resize(cap + 1);
    factorial_[0] = 1;
    for (int k = 1; k <= cap; ++k) factorial_[k] = factorial_[k - 1] * k;

    binomial_.resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        binomial_[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k)
            binomial_[n][k] = binomial_[n - 1][k - 1] + binomial_[n - 1][k];
    }
}

const BigInt& CombinatoricTables::bell(int k) const {
    check_nonnegative(k, "bell index");
    if (k > cap_) throw RangeError("bell index exceeds table cap");
    return bell_[k];
}

const BigInt& CombinatoricTables::stirling2(int r, int t) const {
    check_nonnegative(r, "stirling row");
    check_nonnegative(t, "stirling block count");
    if (r > cap_) throw RangeError("stirling row exceeds table cap");
    if (t > r) return zero();
    return stirling2_[r][t];
}

const BigInt& CombinatoricTables::factorial(int k) const {
    check_nonnegative(k, "factorial argument");
    if (k > cap_) throw RangeError("factorial argument exceeds table cap");
    return factorial_[k];
}

const BigInt& CombinatoricTables::binomial(int n, int k) const {
    check_nonnegative(n, "binomial n");
    if (n > cap_) throw RangeError("binomial n exceeds table cap");
    if (k < 0 || k > n) return zero();
    return binomial_[n][k];
}

const CombinatoricTables& CombinatoricTables::standard() {
    static const CombinatoricTables tables(kDefaultCap);
    return tables;
}

const BigInt& bell(int k) { return CombinatoricTables::standard().bell(k); }
const BigInt& stirling2(int r, int t) { return CombinatoricTables::standard().stirling2(r, t); }
const BigInt& factorial(int k) { return CombinatoricTables::standard().factorial(k); }
const BigInt& binomial(int n, int k) { return CombinatoricTables::standard().binomial(n, k); }

} // namespace partsym
