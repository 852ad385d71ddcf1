#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "partsym/bigint.hpp"

namespace partsym {

// Dense truncated power series in 1-3 named formal variables with exact
// rational coefficients. Coefficients beyond the per-variable truncation
// orders are discarded by every operation, so +, * and exp stay closed.
//
// Two series interoperate only when their variable lists and orders match
// exactly; callers build all operands from one shared descriptor rather
// than relying on positional unification.
class TruncatedSeries {
public:
    // Zero series over the given variables and inclusive max exponents.
    TruncatedSeries(std::vector<std::string> vars, std::vector<int> orders);

    // scale * exp(sum_i weights[i] * var[i]), truncated.
    static TruncatedSeries exp_atom(std::vector<std::string> vars, std::vector<int> orders,
                                    std::vector<long long> weights, BigRational scale);

    // Single term coeff * var^exponents.
    static TruncatedSeries monomial(std::vector<std::string> vars, std::vector<int> orders,
                                    std::vector<int> exponents, BigRational coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& orders() const { return orders_; }
    int dimension() const { return static_cast<int>(vars_.size()); }
    std::size_t cell_count() const { return coeffs_.size(); }

    const BigRational& coeff(std::span<const int> exponents) const;
    const BigRational& coeff(std::initializer_list<int> exponents) const {
        return coeff(std::span<const int>(exponents.begin(), exponents.size()));
    }
    void set_coeff(std::span<const int> exponents, BigRational value);

    bool same_shape(const TruncatedSeries& other) const {
        return vars_ == other.vars_ && orders_ == other.orders_;
    }
    bool is_zero() const;

    friend TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries scale(const TruncatedSeries& a, const BigRational& c);
    friend TruncatedSeries series_exp(const TruncatedSeries& g);

private:
    std::vector<std::string> vars_;
    std::vector<int> orders_;
    std::vector<std::size_t> strides_; // last variable varies fastest
    std::vector<BigRational> coeffs_;

    std::size_t index_of(std::span<const int> exponents) const;
    std::vector<int> decode(std::size_t flat) const;
    void require_same_shape(const TruncatedSeries& other) const;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const BigRational& c);

// exp of a series with zero constant term, exact within the truncation.
TruncatedSeries series_exp(const TruncatedSeries& g);

// (prod_i exponents[i]!) * [var^exponents] f, which must be an integer.
BigInt egf_count(const TruncatedSeries& f, std::span<const int> exponents);
inline BigInt egf_count(const TruncatedSeries& f, std::initializer_list<int> exponents) {
    return egf_count(f, std::span<const int>(exponents.begin(), exponents.size()));
}

} // namespace partsym
