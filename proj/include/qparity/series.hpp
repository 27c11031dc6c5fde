#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "qparity/errors.hpp"

namespace qparity {

using BigInt = mpz_class;

enum class Domain { Integers, Mod2 };

const char* to_string(Domain d);

/* A formal power series in q truncated at order N: coefficients of
 * q^0 .. q^{N-1} are stored and exact, everything from q^N on is unknown.
 *
 * Integers-domain coefficients are GMP integers. Mod2 coefficients are
 * bit-packed, 64 per word, little-endian within the word (bit k of the
 * series is bit k%64 of word k/64). Bits at or above the order are kept
 * zero so that word-level comparisons and popcounts are exact.
 *
 * Values are immutable once built; every operation returns a new series.
 */
class TruncatedSeries {
public:
    /// The zero series of the given order (order >= 1).
    static TruncatedSeries zero(Domain domain, std::size_t order);
    /// The constant series 1.
    static TruncatedSeries one(Domain domain, std::size_t order);

    static TruncatedSeries from_integers(std::vector<BigInt> coeffs);
    static TruncatedSeries from_integers(std::span<const long> coeffs);
    /// Each entry is reduced to its parity.
    static TruncatedSeries from_bits(std::span<const int> bits);
    static TruncatedSeries from_words(std::vector<std::uint64_t> words, std::size_t order);

    Domain domain() const noexcept { return domain_; }
    std::size_t order() const noexcept { return order_; }

    /// Coefficient of q^k; 0/1 in the Mod2 domain. Throws std::out_of_range for k >= order.
    BigInt coefficient(std::size_t k) const;
    /// Parity of the coefficient of q^k, valid in either domain.
    bool odd(std::size_t k) const;
    bool is_zero(std::size_t k) const;

    /// Integers domain only.
    std::span<const BigInt> integers() const;
    /// Mod2 domain only.
    std::span<const std::uint64_t> words() const;

    /// Number of nonzero coefficients.
    std::size_t weight() const;
    /// Exponents carrying a nonzero coefficient, ascending.
    std::vector<std::size_t> support() const;

    /// Same series cut down to a smaller order.
    TruncatedSeries truncate(std::size_t order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    TruncatedSeries(Domain domain, std::size_t order);

    friend class SeriesBuilder;

    Domain domain_;
    std::size_t order_;
    std::vector<BigInt> ints_;
    std::vector<std::uint64_t> bits_;
};

/* Mutable staging area used by the constructors below; finishes into an
 * immutable TruncatedSeries. */
class SeriesBuilder {
public:
    SeriesBuilder(Domain domain, std::size_t order);
    explicit SeriesBuilder(TruncatedSeries start);

    std::size_t order() const noexcept { return s_.order_; }
    Domain domain() const noexcept { return s_.domain_; }

    /// Adds delta to the coefficient of q^k (parity of delta in Mod2); no-op for k >= order.
    void add(std::size_t k, long delta);
    void set(std::size_t k, const BigInt& value);

    /// In place multiplication by (1 - q^m), m >= 1.
    void mul_one_minus(std::size_t m);

    TruncatedSeries finish() &&;

private:
    TruncatedSeries s_;
};

std::size_t words_for(std::size_t order);

/* --- arithmetic ------------------------------------------------------- */

/// Product through order min(a.order, b.order). Throws DomainMismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; the constant term must be a unit (+-1, or 1 mod 2).
TruncatedSeries series_recip(const TruncatedSeries& a);

/// Coefficient n of the result is coefficient M*n + r of s.
TruncatedSeries dissect(const TruncatedSeries& s, std::size_t modulus, std::size_t residue);

TruncatedSeries reduce_mod2(const TruncatedSeries& s);

/// s(q) -> s(q^factor), keeping the order of s.
TruncatedSeries dilate(const TruncatedSeries& s, std::size_t factor);

/* --- named series ----------------------------------------------------- */

/// (q^step; q^step)_inf^power. Negative powers go through series_recip.
TruncatedSeries euler_product(std::size_t step, int power, std::size_t order,
                              Domain domain = Domain::Integers);

/// sum over all integers n of (-1)^n q^{n(3n-1)/2}
TruncatedSeries euler_pentagonal(std::size_t order, Domain domain = Domain::Integers);

/// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}
TruncatedSeries jacobi_cube(std::size_t order, Domain domain = Domain::Integers);

/// sum_{n>=0} (-1)^n q^{t n(n+1)/2}
TruncatedSeries alternating_triangular(std::size_t t, std::size_t order,
                                       Domain domain = Domain::Integers);

/// psi(q) = sum_{n>=0} q^{n(n+1)/2}
TruncatedSeries theta_psi(std::size_t order, Domain domain = Domain::Integers);

}  // namespace qparity
