#include "qparity/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qparity/errors.hpp"

namespace qparity {

Partition::Partition(std::vector<unsigned> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

MexSpec::MexSpec(unsigned modulus, unsigned start)
    : modulus(modulus)
    , start(start)
{
    if (modulus == 0 || start == 0 || start > modulus)
        throw std::invalid_argument("mex parameters need 1 <= a <= A, got A=" +
                                    std::to_string(modulus) + " a=" + std::to_string(start));
}

/* --- enumeration ------------------------------------------------------ */

PartitionRange::PartitionRange(unsigned n)
    : n_(n)
{
    if (n > kEnumerationCeiling)
        throw ResourceLimitError("exhaustive enumeration refused for n=" + std::to_string(n) +
                                 " (ceiling " + std::to_string(kEnumerationCeiling) + ")");
}

PartitionRange::iterator::iterator(unsigned n)
    : done_(false)
{
    if (n > 0)
        current_.parts_.push_back(n);
    current_.weight_ = n;
}

PartitionRange::iterator& PartitionRange::iterator::operator++()
{
    auto& p = current_.parts_;
    unsigned spill = 0;
    while (!p.empty() && p.back() == 1) {
        p.pop_back();
        ++spill;
    }
    if (p.empty()) {
        done_ = true;
        return *this;
    }
    unsigned x = --p.back();
    ++spill;
    // refill with the largest parts allowed: copies of x, then the remainder
    while (spill >= x) {
        p.push_back(x);
        spill -= x;
    }
    if (spill > 0)
        p.push_back(spill);
    return *this;
}

PartitionRange enumerate_partitions(unsigned n)
{
    return PartitionRange(n);
}

/* --- statistics ------------------------------------------------------- */

unsigned mex(const Partition& lambda, const MexSpec& spec)
{
    std::vector<bool> present(lambda.largest() + 1, false);
    for (unsigned part : lambda.parts())
        present[part] = true;
    unsigned c = spec.start;
    while (c < present.size() && present[c])
        c += spec.modulus;
    return c;
}

std::uint64_t p_direct(const MexSpec& spec, unsigned n)
{
    const unsigned target = spec.start % (2 * spec.modulus);
    std::uint64_t count = 0;
    for (const auto& lambda : enumerate_partitions(n))
        if (mex(lambda, spec) % (2 * spec.modulus) == target)
            ++count;
    return count;
}

int rank(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("rank of the empty partition is undefined");
    return static_cast<int>(lambda.largest()) - static_cast<int>(lambda.length());
}

int crank(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("crank of the empty partition is undefined");
    const auto& parts = lambda.parts();
    int ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1U));
    if (ones == 0)
        return static_cast<int>(lambda.largest());
    int larger = static_cast<int>(std::count_if(parts.begin(), parts.end(), [ones](unsigned x) {
        return x > static_cast<unsigned>(ones);
    }));
    return larger - ones;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<unsigned> conj(lambda.largest(), 0);
    for (unsigned part : lambda.parts())
        for (unsigned j = 0; j < part; ++j)
            ++conj[j];
    return Partition(std::move(conj));
}

std::vector<unsigned> hook_lengths(const Partition& lambda)
{
    const auto& rows = lambda.parts();
    const auto cols = conjugate(lambda).parts();
    std::vector<unsigned> hooks;
    hooks.reserve(lambda.weight());
    for (unsigned i = 0; i < rows.size(); ++i)
        for (unsigned j = 0; j < rows[i]; ++j)
            hooks.push_back((rows[i] - j - 1) + (cols[j] - i - 1) + 1);
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

bool is_t_core(const Partition& lambda, unsigned t)
{
    if (t < 2)
        throw std::invalid_argument("t-core needs t >= 2");
    auto hooks = hook_lengths(lambda);
    return std::none_of(hooks.begin(), hooks.end(), [t](unsigned h) { return h % t == 0; });
}

std::uint64_t a_t_direct(unsigned t, unsigned n)
{
    if (t < 2)
        throw std::invalid_argument("a_t needs t >= 2");
    std::uint64_t count = 0;
    for (const auto& lambda : enumerate_partitions(n))
        if (is_t_core(lambda, t))
            ++count;
    return count;
}

}  // namespace qparity
