#include "doctest.h"

#include <random>
#include <vector>

#include "qparity/series.hpp"

#include "../support/oracles.hpp"

using namespace qparity;
using qparity::testing::naive_euler_product;
using qparity::testing::partition_counts;
using qparity::testing::random_bits;
using qparity::testing::random_coeffs;

namespace {

TruncatedSeries ints(std::vector<long> v)
{
    return TruncatedSeries::from_integers(std::span<const long>(v));
}

TruncatedSeries bits(std::vector<int> v)
{
    return TruncatedSeries::from_bits(v);
}

std::vector<long> as_longs(const TruncatedSeries& s)
{
    std::vector<long> out;
    for (std::size_t k = 0; k < s.order(); ++k)
        out.push_back(s.coefficient(k).get_si());
    return out;
}

TruncatedSeries from_mpz(std::vector<mpz_class> v)
{
    return TruncatedSeries::from_integers(std::move(v));
}

}  // namespace

TEST_CASE("series_mul examples")
{
    CHECK(series_mul(ints({1, 1, 0}), ints({1, -1, 0})) == ints({1, 0, -1}));
    CHECK(series_mul(ints({1, 1, 1, 0}), ints({1, 1, 0, 0})) == ints({1, 2, 2, 1}));

    auto s = ints({3, -1, 4, 1, -5});
    CHECK(series_mul(s, TruncatedSeries::one(Domain::Integers, 5)) == s);
    CHECK(series_mul(TruncatedSeries::one(Domain::Integers, 5), s) == s);
}

TEST_CASE("series_mul truncates to the smaller order")
{
    auto r = series_mul(ints({1, 1, 1, 1, 1}), ints({1, 1}));
    CHECK(r.order() == 2);
    CHECK(r == ints({1, 2}));
}

TEST_CASE("series_mul rejects mixed domains")
{
    CHECK_THROWS_AS(series_mul(ints({1, 1}), bits({1, 1})), DomainMismatch);
}

TEST_CASE("series_recip examples")
{
    auto p = series_recip(euler_product(1, 1, 11));
    CHECK(as_longs(p) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
    CHECK(series_recip(ints({1})) == ints({1}));
    CHECK(series_recip(ints({1, -1, 0, 0})) == ints({1, 1, 1, 1}));
    CHECK(series_recip(ints({-1, 0, 0})) == ints({-1, 0, 0}));
}

TEST_CASE("series_recip matches the coin-change partition counts")
{
    auto p = series_recip(euler_product(1, 1, 400));
    CHECK(p == from_mpz(partition_counts(400)));
}

TEST_CASE("series_recip rejects non-units")
{
    CHECK_THROWS_AS(series_recip(ints({2, 1})), NotAUnit);
    CHECK_THROWS_AS(series_recip(ints({0, 1})), NotAUnit);
    CHECK_THROWS_AS(series_recip(bits({0, 1, 1})), NotAUnit);
}

TEST_CASE("euler_product examples")
{
    CHECK(as_longs(euler_product(1, 1, 13)) ==
          std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
    CHECK(as_longs(euler_product(1, -1, 6)) == std::vector<long>{1, 1, 2, 3, 5, 7});
    CHECK(as_longs(euler_product(2, 1, 3)) == std::vector<long>{1, 0, -1});
    CHECK(euler_product(3, 0, 5) == TruncatedSeries::one(Domain::Integers, 5));
    CHECK_THROWS_AS(euler_product(0, 1, 5), std::invalid_argument);
}

TEST_CASE("euler_product agrees with factor-by-factor expansion")
{
    for (std::size_t step : {1U, 2U, 3U, 7U})
        for (unsigned power : {1U, 2U, 3U, 5U}) {
            CAPTURE(step);
            CAPTURE(power);
            CHECK(euler_product(step, static_cast<int>(power), 90) ==
                  from_mpz(naive_euler_product(step, power, 90)));
        }
}

TEST_CASE("euler_product negative powers invert the positive ones")
{
    for (int power : {1, 2, 4}) {
        auto pos = euler_product(3, power, 120);
        auto neg = euler_product(3, -power, 120);
        CHECK(series_mul(pos, neg) == TruncatedSeries::one(Domain::Integers, 120));
    }
}

TEST_CASE("euler_pentagonal examples")
{
    CHECK(as_longs(euler_pentagonal(8)) == std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1});
    auto s = euler_pentagonal(20);
    CHECK(s.coefficient(12) == -1);
    CHECK(s.coefficient(3) == 0);
}

TEST_CASE("jacobi_cube examples")
{
    CHECK(as_longs(jacobi_cube(7)) == std::vector<long>{1, -3, 0, 5, 0, 0, -7});
    auto s = jacobi_cube(12);
    CHECK(s.coefficient(10) == 9);
    CHECK(s.coefficient(2) == 0);
}

TEST_CASE("alternating_triangular examples")
{
    CHECK(as_longs(alternating_triangular(1, 8)) == std::vector<long>{1, -1, 0, 1, 0, 0, -1, 0});
    CHECK(as_longs(alternating_triangular(3, 10)) == std::vector<long>{1, 0, 0, -1, 0, 0, 0, 0, 0, 1});
    CHECK(alternating_triangular(1, 1).coefficient(0) == 1);
    CHECK_THROWS_AS(alternating_triangular(0, 5), std::invalid_argument);
}

TEST_CASE("theta_psi examples")
{
    CHECK(theta_psi(11).support() == std::vector<std::size_t>{0, 1, 3, 6, 10});
    auto s = theta_psi(20);
    CHECK(s.coefficient(15) == 1);
    CHECK(s.coefficient(2) == 0);
}

TEST_CASE("dissect examples")
{
    auto s = ints({1, 1, 2, 3, 5, 7, 11});
    CHECK(dissect(s, 2, 0) == ints({1, 2, 5, 11}));
    CHECK(dissect(s, 2, 1) == ints({1, 3, 7}));
    CHECK(dissect(s, 1, 0) == s);
    CHECK(dissect(s, 3, 2).order() == 2);
    CHECK_THROWS_AS(dissect(s, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(dissect(s, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(dissect(s, 10, 8), std::invalid_argument);
}

TEST_CASE("reduce_mod2 examples")
{
    CHECK(reduce_mod2(ints({1, -3, 0, 5})) == bits({1, 1, 0, 1}));
    CHECK(reduce_mod2(ints({1, 1, 2, 3, 5, 7})) == bits({1, 1, 0, 1, 1, 1}));
    CHECK(reduce_mod2(TruncatedSeries::zero(Domain::Integers, 9)) ==
          TruncatedSeries::zero(Domain::Mod2, 9));
    CHECK_THROWS_AS(reduce_mod2(bits({1, 0})), DomainMismatch);
}

TEST_CASE("series construction and access errors")
{
    CHECK_THROWS_AS(TruncatedSeries::zero(Domain::Integers, 0), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::from_integers(std::vector<BigInt>{}), std::invalid_argument);
    auto s = ints({1, 2});
    CHECK_THROWS_AS(s.coefficient(2), std::out_of_range);
    CHECK_THROWS_AS(s.words(), DomainMismatch);
    CHECK_THROWS_AS(bits({1}).integers(), DomainMismatch);
    CHECK_THROWS_AS(s.truncate(3), std::invalid_argument);
}

TEST_CASE("Mod2 series keep bits above the order clear")
{
    auto s = TruncatedSeries::from_words({~std::uint64_t{0}}, 10);
    CHECK(s.weight() == 10);
    CHECK(s.words()[0] == 0x3ffU);
}

/* --- identities ------------------------------------------------------- */

TEST_CASE("pentagonal sum equals (q;q)")
{
    for (std::size_t n : {1U, 2U, 5U, 13U, 64U, 65U, 500U, 1500U}) {
        CAPTURE(n);
        CHECK(euler_pentagonal(n) == euler_product(1, 1, n));
        CHECK(euler_pentagonal(n, Domain::Mod2) == euler_product(1, 1, n, Domain::Mod2));
    }
}

TEST_CASE("jacobi sum equals (q;q)^3")
{
    for (std::size_t n : {1U, 7U, 100U, 1200U}) {
        CAPTURE(n);
        CHECK(jacobi_cube(n) == euler_product(1, 3, n));
    }
}

TEST_CASE("psi equals (q^2;q^2)^2/(q;q)")
{
    for (std::size_t n : {1U, 11U, 300U, 1000U}) {
        CAPTURE(n);
        CHECK(theta_psi(n) == series_mul(euler_product(2, 2, n), series_recip(euler_product(1, 1, n))));
    }
}

TEST_CASE("(q;q)^3 and psi agree mod 2")
{
    CHECK(reduce_mod2(jacobi_cube(3000)) == reduce_mod2(theta_psi(3000)));
    CHECK(jacobi_cube(3000, Domain::Mod2) == theta_psi(3000, Domain::Mod2));
}

TEST_CASE("squaring mod 2 dilates")
{
    auto e = euler_product(1, 1, 2000);
    CHECK(reduce_mod2(series_mul(e, e)) == reduce_mod2(euler_product(2, 1, 2000)));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t order = 1 + rng() % 400;
        auto s = TruncatedSeries::from_bits(random_bits(rng, order));
        auto sq = series_mul(s, s);
        for (std::size_t k = 0; k < order; ++k) {
            bool expect = k % 2 == 0 && s.odd(k / 2);
            REQUIRE(sq.odd(k) == expect);
        }
        CHECK(sq == dilate(s, 2));
    }
}

/* --- properties ------------------------------------------------------- */

TEST_CASE("packed Mod2 multiplication matches integer multiplication reduced")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t na = 1 + rng() % 300;
        std::size_t nb = 1 + rng() % 300;
        double density = trial % 3 == 0 ? 0.05 : 0.5;
        auto a = random_bits(rng, na, density);
        auto b = random_bits(rng, nb, density);
        std::vector<long> la(a.begin(), a.end()), lb(b.begin(), b.end());
        auto expect = reduce_mod2(series_mul(ints(la), ints(lb)));
        REQUIRE(series_mul(bits(a), bits(b)) == expect);
    }
}

TEST_CASE("integer multiplication matches the naive convolution")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 80;
        auto a = random_coeffs(rng, n, -50, 50);
        auto b = random_coeffs(rng, n, -50, 50);
        if (trial % 2)
            for (std::size_t i = 1; i < n; i += 2)
                a[i] = 0;
        std::vector<mpz_class> ma(a.begin(), a.end()), mb(b.begin(), b.end());
        REQUIRE(series_mul(ints(a), ints(b)) == from_mpz(qparity::testing::naive_mul(ma, mb, n)));
    }
}

TEST_CASE("a * recip(a) = 1 for units")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 200;
        auto c = random_coeffs(rng, n, -9, 9);
        c[0] = trial % 2 ? 1 : -1;
        auto a = ints(c);
        REQUIRE(series_mul(a, series_recip(a)) == TruncatedSeries::one(Domain::Integers, n));

        std::size_t m = 1 + rng() % 2000;
        auto bv = random_bits(rng, m);
        bv[0] = 1;
        auto b = bits(bv);
        auto inv = series_recip(b);
        REQUIRE(series_mul(b, inv) == TruncatedSeries::one(Domain::Mod2, m));
    }
}

TEST_CASE("Mod2 reciprocal agrees with the integer reciprocal reduced")
{
    for (std::size_t n : {1U, 63U, 64U, 65U, 129U, 1000U})
        CHECK(series_recip(euler_product(1, 1, n, Domain::Mod2)) ==
              reduce_mod2(series_recip(euler_product(1, 1, n))));
}

TEST_CASE("Mod2 euler products agree with integer ones reduced")
{
    for (std::size_t step : {1U, 2U, 5U, 23U})
        for (int power : {1, 3, -1, -2, 5}) {
            CAPTURE(step);
            CAPTURE(power);
            CHECK(euler_product(step, power, 700, Domain::Mod2) ==
                  reduce_mod2(euler_product(step, power, 700)));
        }
}

TEST_CASE("interleaving all M dissections rebuilds the series")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 150;
        std::size_t m = 1 + rng() % std::min<std::size_t>(n, 12);
        auto c = random_coeffs(rng, n, -1000, 1000);
        auto s = ints(c);
        auto sb = reduce_mod2(s);
        std::vector<long> rebuilt(n, 0);
        std::vector<int> rebuilt_bits(n, 0);
        for (std::size_t r = 0; r < m; ++r) {
            auto part = dissect(s, m, r);
            auto part_bits = dissect(sb, m, r);
            REQUIRE(part.order() == (n - r + m - 1) / m);
            for (std::size_t k = 0; k < part.order(); ++k) {
                rebuilt[m * k + r] = part.coefficient(k).get_si();
                rebuilt_bits[m * k + r] = part_bits.odd(k);
            }
        }
        REQUIRE(rebuilt == c);
        REQUIRE(bits(rebuilt_bits) == sb);
    }
}

TEST_CASE("results at a lower order are prefixes of results at a higher order")
{
    for (Domain d : {Domain::Integers, Domain::Mod2}) {
        CHECK(euler_product(1, -1, 1000, d).truncate(300) == euler_product(1, -1, 300, d));
        CHECK(euler_product(3, 3, 777, d).truncate(130) == euler_product(3, 3, 130, d));
        CHECK(jacobi_cube(500, d).truncate(64) == jacobi_cube(64, d));
    }
}
