#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

namespace qparity {

/// Largest n any exhaustive enumeration will run for; p(45) = 89134.
inline constexpr unsigned kEnumerationCeiling = 45;

/// Weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    unsigned largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    friend class PartitionRange;

    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/* Parameters of mex_{A,a}: the progression a, a+A, a+2A, ... with 1 <= a <= A. */
struct MexSpec {
    unsigned modulus;  // A
    unsigned start;    // a

    MexSpec(unsigned modulus, unsigned start);
};

/* All partitions of n, each exactly once, in decreasing lexicographic
 * order: (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1). For n = 0 the
 * range holds the single empty partition.
 *
 * The iterator hands out a reference to a partition it rewrites in place,
 * so copy it if it has to outlive the next increment.
 */
class PartitionRange {
public:
    /// Throws ResourceLimitError for n above kEnumerationCeiling.
    explicit PartitionRange(unsigned n);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class PartitionRange;
        explicit iterator(unsigned n);

        Partition current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

private:
    unsigned n_;
};

PartitionRange enumerate_partitions(unsigned n);

/// Smallest member of {a, a+A, a+2A, ...} that is not a part of lambda.
unsigned mex(const Partition& lambda, const MexSpec& spec);

/// Number of partitions of n whose mex_{A,a} is congruent to a modulo 2A.
std::uint64_t p_direct(const MexSpec& spec, unsigned n);

/// Dyson's rank: largest part minus number of parts.
int rank(const Partition& lambda);

/* Crank. With w the number of 1s and m the number of parts
 * larger than w: the largest part when w = 0, otherwise m - w. */
int crank(const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// Hook lengths of every cell of the Young diagram, sorted ascending.
std::vector<unsigned> hook_lengths(const Partition& lambda);

/// No hook length divisible by t. The empty partition is a t-core.
bool is_t_core(const Partition& lambda, unsigned t);

/// Number of t-core partitions of n, by exhaustive hook-length check.
std::uint64_t a_t_direct(unsigned t, unsigned n);

}  // namespace qparity
