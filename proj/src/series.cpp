#include "qparity/series.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace qparity {

namespace {

constexpr std::size_t kWordBits = 64;

void require_order(std::size_t order)
{
    if (order == 0)
        throw std::invalid_argument("series order must be at least 1");
}

void require_same_domain(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.domain() != b.domain())
        throw DomainMismatch(std::string("series domains differ: ") + to_string(a.domain()) +
                             " vs " + to_string(b.domain()));
}

void require_integers(const TruncatedSeries& s, const char* what)
{
    if (s.domain() != Domain::Integers)
        throw DomainMismatch(std::string(what) + " requires an Integers-domain series");
}

void clear_tail(std::vector<std::uint64_t>& words, std::size_t order)
{
    std::size_t rem = order % kWordBits;
    if (rem != 0 && !words.empty())
        words.back() &= (std::uint64_t{1} << rem) - 1;
}

/* dst ^= src << shift, restricted to the words of dst. */
void xor_shifted(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t shift)
{
    std::size_t ws = shift / kWordBits;
    unsigned bs = static_cast<unsigned>(shift % kWordBits);
    if (ws >= dst.size())
        return;
    std::size_t end = std::min(dst.size(), src.size() + ws + (bs ? 1 : 0));
    if (bs == 0) {
        for (std::size_t k = ws; k < end; ++k)
            dst[k] ^= src[k - ws];
        return;
    }
    for (std::size_t k = ws; k < end; ++k) {
        std::size_t lo = k - ws;
        std::uint64_t w = lo < src.size() ? src[lo] << bs : 0;
        if (lo >= 1 && lo - 1 < src.size())
            w |= src[lo - 1] >> (kWordBits - bs);
        dst[k] ^= w;
    }
}

/* Spreads the low 32 bits of x to the even bit positions. */
std::uint64_t spread_bits(std::uint64_t x)
{
    x &= 0xffffffffULL;
    x = (x | (x << 16)) & 0x0000ffff0000ffffULL;
    x = (x | (x << 8)) & 0x00ff00ff00ff00ffULL;
    x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0fULL;
    x = (x | (x << 2)) & 0x3333333333333333ULL;
    x = (x | (x << 1)) & 0x5555555555555555ULL;
    return x;
}

/* s(q)^2 over Z/2, which is s(q^2), at the requested order. */
std::vector<std::uint64_t> square_mod2(std::span<const std::uint64_t> src, std::size_t order)
{
    std::vector<std::uint64_t> out(words_for(order), 0);
    for (std::size_t w = 0; w < src.size(); ++w) {
        if (2 * w < out.size())
            out[2 * w] = spread_bits(src[w]);
        if (2 * w + 1 < out.size())
            out[2 * w + 1] = spread_bits(src[w] >> 32);
    }
    clear_tail(out, order);
    return out;
}

std::vector<std::size_t> nonzero_indices(std::span<const BigInt> c)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0)
            idx.push_back(i);
    return idx;
}

TruncatedSeries mul_integers(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t order)
{
    auto ca = a.integers().first(order);
    auto cb = b.integers().first(order);
    auto ia = nonzero_indices(ca);
    auto ib = nonzero_indices(cb);
    // iterate over the sparser operand
    if (ib.size() < ia.size()) {
        std::swap(ca, cb);
        std::swap(ia, ib);
    }
    std::vector<BigInt> r(order);
    for (std::size_t i : ia) {
        mpz_srcptr x = ca[i].get_mpz_t();
        for (std::size_t j : ib) {
            if (i + j >= order)
                break;
            mpz_addmul(r[i + j].get_mpz_t(), x, cb[j].get_mpz_t());
        }
    }
    return TruncatedSeries::from_integers(std::move(r));
}

TruncatedSeries mul_mod2(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t order)
{
    std::size_t nw = words_for(order);
    auto wa = a.words().first(nw);
    auto wb = b.words().first(nw);
    auto pop = [](std::span<const std::uint64_t> ws) {
        std::size_t c = 0;
        for (auto w : ws)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    };
    if (pop(wb) < pop(wa))
        std::swap(wa, wb);
    std::vector<std::uint64_t> r(nw, 0);
    for (std::size_t w = 0; w < wa.size(); ++w) {
        std::uint64_t bits = wa[w];
        while (bits) {
            unsigned tz = static_cast<unsigned>(std::countr_zero(bits));
            bits &= bits - 1;
            xor_shifted(r, wb, w * kWordBits + tz);
        }
    }
    clear_tail(r, order);
    return TruncatedSeries::from_words(std::move(r), order);
}

TruncatedSeries recip_integers(const TruncatedSeries& a)
{
    auto c = a.integers();
    if (c[0] != 1 && c[0] != -1)
        throw NotAUnit("constant term " + c[0].get_str() + " is not a unit in Z");
    const bool neg = c[0] < 0;
    auto idx = nonzero_indices(c);
    std::vector<BigInt> b(c.size());
    b[0] = c[0];
    BigInt acc;
    for (std::size_t n = 1; n < c.size(); ++n) {
        acc = 0;
        for (std::size_t i : idx) {
            if (i == 0)
                continue;
            if (i > n)
                break;
            mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), b[n - i].get_mpz_t());
        }
        // b_n = -c_0^{-1} * acc, and c_0^{-1} = c_0
        if (neg)
            b[n] = acc;
        else
            b[n] = -acc;
    }
    return TruncatedSeries::from_integers(std::move(b));
}

/* Newton iteration g <- f g^2, which over Z/2 doubles the number of
 * correct coefficients each round. */
TruncatedSeries recip_mod2(const TruncatedSeries& f)
{
    if (!f.odd(0))
        throw NotAUnit("constant term 0 is not a unit in Z/2");
    const std::size_t n = f.order();
    TruncatedSeries g = TruncatedSeries::one(Domain::Mod2, 1);
    std::size_t have = 1;
    while (have < n) {
        std::size_t next = std::min(2 * have, n);
        auto sq = TruncatedSeries::from_words(square_mod2(g.words(), next), next);
        g = series_mul(f.truncate(next), sq);
        have = next;
    }
    return g;
}

TruncatedSeries power_of(const TruncatedSeries& base, unsigned power)
{
    TruncatedSeries r = TruncatedSeries::one(base.domain(), base.order());
    for (unsigned i = 0; i < power; ++i)
        r = series_mul(r, base);
    return r;
}

}  // namespace

const char* to_string(Domain d)
{
    return d == Domain::Integers ? "integers" : "mod2";
}

std::size_t words_for(std::size_t order)
{
    return (order + kWordBits - 1) / kWordBits;
}

/* --- TruncatedSeries -------------------------------------------------- */

TruncatedSeries::TruncatedSeries(Domain domain, std::size_t order)
    : domain_(domain)
    , order_(order)
{
    require_order(order);
    if (domain == Domain::Integers)
        ints_.resize(order);
    else
        bits_.assign(words_for(order), 0);
}

TruncatedSeries TruncatedSeries::zero(Domain domain, std::size_t order)
{
    return TruncatedSeries(domain, order);
}

TruncatedSeries TruncatedSeries::one(Domain domain, std::size_t order)
{
    TruncatedSeries s(domain, order);
    if (domain == Domain::Integers)
        s.ints_[0] = 1;
    else
        s.bits_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::vector<BigInt> coeffs)
{
    require_order(coeffs.size());
    TruncatedSeries s(Domain::Integers, coeffs.size());
    s.ints_ = std::move(coeffs);
    return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const long> coeffs)
{
    std::vector<BigInt> v(coeffs.begin(), coeffs.end());
    return from_integers(std::move(v));
}

TruncatedSeries TruncatedSeries::from_bits(std::span<const int> bits)
{
    TruncatedSeries s(Domain::Mod2, bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k] % 2 != 0)
            s.bits_[k / kWordBits] |= std::uint64_t{1} << (k % kWordBits);
    return s;
}

TruncatedSeries TruncatedSeries::from_words(std::vector<std::uint64_t> words, std::size_t order)
{
    TruncatedSeries s(Domain::Mod2, order);
    if (words.size() != s.bits_.size())
        throw std::invalid_argument("word count does not match series order");
    s.bits_ = std::move(words);
    clear_tail(s.bits_, order);
    return s;
}

BigInt TruncatedSeries::coefficient(std::size_t k) const
{
    if (k >= order_)
        throw std::out_of_range("coefficient index " + std::to_string(k) +
                                " beyond truncation order " + std::to_string(order_));
    if (domain_ == Domain::Integers)
        return ints_[k];
    return odd(k) ? 1 : 0;
}

bool TruncatedSeries::odd(std::size_t k) const
{
    if (k >= order_)
        throw std::out_of_range("coefficient index " + std::to_string(k) +
                                " beyond truncation order " + std::to_string(order_));
    if (domain_ == Domain::Integers)
        return mpz_odd_p(ints_[k].get_mpz_t()) != 0;
    return (bits_[k / kWordBits] >> (k % kWordBits)) & 1U;
}

bool TruncatedSeries::is_zero(std::size_t k) const
{
    if (domain_ == Domain::Integers) {
        if (k >= order_)
            throw std::out_of_range("coefficient index beyond truncation order");
        return sgn(ints_[k]) == 0;
    }
    return !odd(k);
}

std::span<const BigInt> TruncatedSeries::integers() const
{
    if (domain_ != Domain::Integers)
        throw DomainMismatch("integer coefficients requested from a Mod2 series");
    return ints_;
}

std::span<const std::uint64_t> TruncatedSeries::words() const
{
    if (domain_ != Domain::Mod2)
        throw DomainMismatch("packed words requested from an Integers series");
    return bits_;
}

std::size_t TruncatedSeries::weight() const
{
    std::size_t c = 0;
    if (domain_ == Domain::Integers) {
        for (const auto& x : ints_)
            c += sgn(x) != 0;
    } else {
        for (auto w : bits_)
            c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

std::vector<std::size_t> TruncatedSeries::support() const
{
    if (domain_ == Domain::Integers)
        return nonzero_indices(ints_);
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t bits = bits_[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const
{
    require_order(order);
    if (order > order_)
        throw std::invalid_argument("cannot truncate to order " + std::to_string(order) +
                                    " above current order " + std::to_string(order_));
    TruncatedSeries s(domain_, order);
    if (domain_ == Domain::Integers) {
        std::copy_n(ints_.begin(), order, s.ints_.begin());
    } else {
        std::copy_n(bits_.begin(), s.bits_.size(), s.bits_.begin());
        clear_tail(s.bits_, order);
    }
    return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.domain_ == b.domain_ && a.order_ == b.order_ && a.ints_ == b.ints_ &&
           a.bits_ == b.bits_;
}

/* --- SeriesBuilder ---------------------------------------------------- */

SeriesBuilder::SeriesBuilder(Domain domain, std::size_t order)
    : s_(TruncatedSeries::zero(domain, order))
{}

SeriesBuilder::SeriesBuilder(TruncatedSeries start)
    : s_(std::move(start))
{}

void SeriesBuilder::add(std::size_t k, long delta)
{
    if (k >= s_.order_)
        return;
    if (s_.domain_ == Domain::Integers)
        s_.ints_[k] += delta;
    else if (delta % 2 != 0)
        s_.bits_[k / kWordBits] ^= std::uint64_t{1} << (k % kWordBits);
}

void SeriesBuilder::set(std::size_t k, const BigInt& value)
{
    if (k >= s_.order_)
        throw std::out_of_range("coefficient index beyond truncation order");
    if (s_.domain_ == Domain::Integers) {
        s_.ints_[k] = value;
    } else {
        std::uint64_t bit = std::uint64_t{1} << (k % kWordBits);
        if (mpz_odd_p(value.get_mpz_t()))
            s_.bits_[k / kWordBits] |= bit;
        else
            s_.bits_[k / kWordBits] &= ~bit;
    }
}

void SeriesBuilder::mul_one_minus(std::size_t m)
{
    if (m == 0)
        throw std::invalid_argument("factor (1 - q^0) is not allowed");
    const std::size_t n = s_.order_;
    if (m >= n)
        return;
    if (s_.domain_ == Domain::Integers) {
        auto& c = s_.ints_;
        for (std::size_t j = n; j-- > m;)
            if (sgn(c[j - m]) != 0)
                c[j] -= c[j - m];
        return;
    }
    // s ^= s << m, high words first so every source word is still unmodified
    auto& w = s_.bits_;
    std::size_t ws = m / kWordBits;
    unsigned bs = static_cast<unsigned>(m % kWordBits);
    for (std::size_t k = w.size(); k-- > ws;) {
        std::size_t lo = k - ws;
        std::uint64_t src = w[lo] << bs;
        if (bs && lo >= 1)
            src |= w[lo - 1] >> (kWordBits - bs);
        w[k] ^= src;
    }
    clear_tail(w, n);
}

TruncatedSeries SeriesBuilder::finish() &&
{
    return std::move(s_);
}

/* --- arithmetic ------------------------------------------------------- */

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    require_same_domain(a, b);
    std::size_t order = std::min(a.order(), b.order());
    if (a.domain() == Domain::Integers)
        return mul_integers(a, b, order);
    return mul_mod2(a, b, order);
}

TruncatedSeries series_recip(const TruncatedSeries& a)
{
    if (a.domain() == Domain::Integers)
        return recip_integers(a);
    return recip_mod2(a);
}

TruncatedSeries dissect(const TruncatedSeries& s, std::size_t modulus, std::size_t residue)
{
    if (modulus == 0)
        throw std::invalid_argument("dissection modulus must be positive");
    if (residue >= modulus)
        throw std::invalid_argument("residue " + std::to_string(residue) +
                                    " is not below modulus " + std::to_string(modulus));
    if (residue >= s.order())
        throw std::invalid_argument("residue " + std::to_string(residue) +
                                    " leaves nothing of a series of order " +
                                    std::to_string(s.order()));
    std::size_t order = (s.order() - residue + modulus - 1) / modulus;
    SeriesBuilder out(s.domain(), order);
    if (s.domain() == Domain::Integers) {
        auto c = s.integers();
        for (std::size_t n = 0; n < order; ++n)
            out.set(n, c[modulus * n + residue]);
    } else {
        for (std::size_t n = 0; n < order; ++n)
            if (s.odd(modulus * n + residue))
                out.add(n, 1);
    }
    return std::move(out).finish();
}

TruncatedSeries reduce_mod2(const TruncatedSeries& s)
{
    require_integers(s, "reduce_mod2");
    std::vector<std::uint64_t> w(words_for(s.order()), 0);
    auto c = s.integers();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (mpz_odd_p(c[k].get_mpz_t()))
            w[k / kWordBits] |= std::uint64_t{1} << (k % kWordBits);
    return TruncatedSeries::from_words(std::move(w), s.order());
}

TruncatedSeries dilate(const TruncatedSeries& s, std::size_t factor)
{
    if (factor == 0)
        throw std::invalid_argument("dilation factor must be positive");
    if (s.domain() == Domain::Mod2 && factor == 2)
        return TruncatedSeries::from_words(square_mod2(s.words(), s.order()), s.order());
    SeriesBuilder out(s.domain(), s.order());
    for (std::size_t k = 0; k * factor < s.order(); ++k)
        if (!s.is_zero(k))
            out.set(k * factor, s.coefficient(k));
    return std::move(out).finish();
}

/* --- named series ----------------------------------------------------- */

TruncatedSeries euler_product(std::size_t step, int power, std::size_t order, Domain domain)
{
    if (step == 0)
        throw std::invalid_argument("euler_product step must be positive");
    require_order(order);
    if (power == 0)
        return TruncatedSeries::one(domain, order);

    // Largest factors first: partial products then only count partitions
    // into large distinct parts, which keeps integer coefficients small.
    SeriesBuilder b(TruncatedSeries::one(domain, order));
    for (std::size_t k = (order - 1) / step; k >= 1; --k)
        b.mul_one_minus(step * k);
    TruncatedSeries base = std::move(b).finish();

    unsigned mag = static_cast<unsigned>(power < 0 ? -static_cast<long>(power) : power);
    TruncatedSeries p = power_of(base, mag);
    return power < 0 ? series_recip(p) : p;
}

TruncatedSeries euler_pentagonal(std::size_t order, Domain domain)
{
    SeriesBuilder b(domain, order);
    b.add(0, 1);
    for (std::size_t n = 1;; ++n) {
        std::size_t lo = n * (3 * n - 1) / 2;
        if (lo >= order)
            break;
        long sign = (n % 2 == 0) ? 1 : -1;
        b.add(lo, sign);
        b.add(n * (3 * n + 1) / 2, sign);
    }
    return std::move(b).finish();
}

TruncatedSeries jacobi_cube(std::size_t order, Domain domain)
{
    SeriesBuilder b(domain, order);
    for (std::size_t n = 0; n * (n + 1) / 2 < order; ++n) {
        long mag = static_cast<long>(2 * n + 1);
        b.add(n * (n + 1) / 2, n % 2 == 0 ? mag : -mag);
    }
    return std::move(b).finish();
}

TruncatedSeries alternating_triangular(std::size_t t, std::size_t order, Domain domain)
{
    if (t == 0)
        throw std::invalid_argument("alternating_triangular needs t >= 1");
    SeriesBuilder b(domain, order);
    for (std::size_t n = 0; t * (n * (n + 1) / 2) < order; ++n)
        b.add(t * (n * (n + 1) / 2), n % 2 == 0 ? 1 : -1);
    return std::move(b).finish();
}

TruncatedSeries theta_psi(std::size_t order, Domain domain)
{
    SeriesBuilder b(domain, order);
    for (std::size_t n = 0; n * (n + 1) / 2 < order; ++n)
        b.add(n * (n + 1) / 2, 1);
    return std::move(b).finish();
}

}  // namespace qparity
