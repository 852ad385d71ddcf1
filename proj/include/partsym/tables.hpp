#pragma once

#include <vector>

#include "partsym/bigint.hpp"

namespace partsym {

// Precomputed Bell numbers, Stirling numbers of the second kind, factorials
// and binomial coefficients up to a fixed cap. Values are immutable after
// construction; the shared default instance is built on first use.
class CombinatoricTables {
public:
    static constexpr int kDefaultCap = 64;

    explicit CombinatoricTables(int cap);

    int cap() const { return cap_; }

    // k-th Bell number (set partitions of a k-set).
    const BigInt& bell(int k) const;

    // Partitions of an r-set into exactly t nonempty blocks; 0 when t > r.
    const BigInt& stirling2(int r, int t) const;

    const BigInt& factorial(int k) const;

    // 0 when k > n or k < 0.
    const BigInt& binomial(int n, int k) const;

    // Shared instance with the default cap; safe under concurrent first use.
    static const CombinatoricTables& standard();

private:
    int cap_;
    std::vector<BigInt> bell_;
    std::vector<std::vector<BigInt>> stirling2_; // row r holds t = 0..r
    std::vector<BigInt> factorial_;
    std::vector<std::vector<BigInt>> binomial_; // row n holds k = 0..n
};

// Convenience accessors over the shared table.
const BigInt& bell(int k);
const BigInt& stirling2(int r, int t);
const BigInt& factorial(int k);
const BigInt& binomial(int n, int k);

} // namespace partsym
