#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "qparity/errors.hpp"
#include "qparity/genfun.hpp"
#include "qparity/partitions.hpp"
#include "qparity/verify.hpp"

using namespace qparity;

namespace {

bool pent_by_search(std::uint64_t n)
{
    for (std::uint64_t k = 1; k * (3 * k - 1) <= n; ++k)
        if (k * (3 * k - 1) == n || k * (3 * k + 1) == n)
            return true;
    return false;
}

bool square_by_search(std::uint64_t v)
{
    for (std::uint64_t r = 0; r * r <= v; ++r)
        if (r * r == v)
            return true;
    return false;
}

std::set<std::size_t> verified(const std::vector<CongruenceClaim>& claims)
{
    std::set<std::size_t> out;
    for (const auto& c : claims)
        if (c.status == ClaimStatus::VerifiedToBound)
            out.insert(c.residue);
    return out;
}

void check_report_invariant(const VerificationReport& r)
{
    CAPTURE(r.theorem_id);
    CHECK(r.passed == !r.counterexample.has_value());
}

}  // namespace

TEST_CASE("is_pent_type examples and brute-force agreement")
{
    CHECK(is_pent_type(2));
    CHECK_FALSE(is_pent_type(1));
    CHECK(is_pent_type(70));
    for (std::uint64_t n = 1; n < 5000; ++n)
        REQUIRE(is_pent_type(n) == pent_by_search(n));
}

TEST_CASE("is_square_3n1 examples and brute-force agreement")
{
    CHECK(is_square_3n1(5));
    CHECK_FALSE(is_square_3n1(2));
    CHECK(is_square_3n1(16));
    for (std::uint64_t n = 1; n < 5000; ++n)
        REQUIRE(is_square_3n1(n) == square_by_search(3 * n + 1));
}

TEST_CASE("isqrt at perfect squares and their neighbours")
{
    for (std::uint64_t r : {1ULL, 2ULL, 1000ULL, 65535ULL, 4294967295ULL}) {
        CHECK(isqrt(r * r) == r);
        CHECK(isqrt(r * r - 1) == r - 1);
        CHECK(isqrt(r * r + 1) == r);
    }
}

TEST_CASE("legendre_nonresidue examples")
{
    CHECK(legendre_nonresidue(3, 5));
    CHECK_FALSE(legendre_nonresidue(4, 5));
    CHECK_FALSE(legendre_nonresidue(25, 5));
    CHECK(legendre_nonresidue(-2, 5));
    CHECK_THROWS_AS(legendre_nonresidue(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(legendre_nonresidue(2, 3), std::invalid_argument);
}

TEST_CASE("legendre_nonresidue agrees with exhaustive squares")
{
    for (std::uint64_t p = 5; p < 60; ++p) {
        if (!is_prime(p))
            continue;
        std::set<std::uint64_t> squares;
        for (std::uint64_t x = 0; x < p; ++x)
            squares.insert(x * x % p);
        for (long long x = 0; x < static_cast<long long>(2 * p); ++x) {
            bool expect = !squares.count(static_cast<std::uint64_t>(x) % p);
            REQUIRE(legendre_nonresidue(x, p) == expect);
        }
    }
}

TEST_CASE("verify_characterization")
{
    auto small = verify_characterization(Characterization::P11, 5);
    CHECK(small.passed);
    CHECK(ptt_mod2_series(1, 5).support() == std::vector<std::size_t>{0, 2, 4});

    auto r11 = verify_characterization(Characterization::P11, 20000);
    auto r33 = verify_characterization(Characterization::P33, 20000);
    CHECK(r11.passed);
    CHECK(r33.passed);
    check_report_invariant(r11);
    CHECK_THROWS_AS(verify_characterization(Characterization::P33, 0), std::invalid_argument);
}

TEST_CASE("characterization predicates agree with enumeration parity")
{
    for (unsigned n = 1; n <= 30; ++n) {
        CHECK((p_direct(MexSpec(1, 1), n) % 2 == 1) == is_pent_type(n));
        CHECK((p_direct(MexSpec(3, 3), n) % 2 == 1) == is_square_3n1(n));
    }
}

TEST_CASE("verify_crank_rank")
{
    CHECK(verify_crank_rank(25).passed);
    CHECK_THROWS_AS(verify_crank_rank(kEnumerationCeiling + 1), ResourceLimitError);
    CHECK(p_direct(MexSpec(1, 1), 1) == 0);
    CHECK(p_direct(MexSpec(3, 3), 2) == 2);
}

TEST_CASE("verify_odd_progression")
{
    CHECK(verify_odd_progression(20000).passed);
    CHECK(p_direct(MexSpec(1, 1), 1) % 2 == 0);
    CHECK(p_direct(MexSpec(1, 1), 3) == 2);
}

TEST_CASE("verify_qnr_families")
{
    const std::vector<std::uint64_t> p5{5};
    auto r11 = verify_qnr_families(Characterization::P11, p5, 20000);
    auto r33 = verify_qnr_families(Characterization::P33, p5, 20000);
    CHECK(r11.passed);
    CHECK(r33.passed);
    CHECK(r11.detail == "p=5 r={1,3}");
    CHECK(r33.detail == "p=5 r={2,4}");
    CHECK(p_direct(MexSpec(3, 3), 2) == 2);
    CHECK(p_direct(MexSpec(3, 3), 7) == 10);

    const std::vector<std::uint64_t> p7{7};
    CHECK(verify_qnr_families(Characterization::P33, p7, 5000).detail == "p=7 r={3,4,6}");

    const std::vector<std::uint64_t> bad{9};
    CHECK_THROWS_AS(verify_qnr_families(Characterization::P11, bad, 100), std::invalid_argument);
}

TEST_CASE("verify_power4_families")
{
    CHECK(verify_power4_families(6, 20000).passed);
    CHECK(p_direct(MexSpec(3, 3), 6) == 8);
    CHECK(p_direct(MexSpec(3, 3), 4) == 4);
    CHECK(ptt_series(3, 13).coefficient(12) == 50);
    for (std::uint64_t m = 0, pow4 = 1; m <= 20; ++m, pow4 *= 4) {
        CHECK((7 * pow4 - 1) % 3 == 0);
        CHECK((10 * pow4 - 1) % 3 == 0);
        CHECK((13 * pow4 - 1) % 3 == 0);
    }
}

TEST_CASE("the seven congruence lists hold for p_{t,t} and for a_t")
{
    CHECK(verify_theorem6(10000).passed);
    CHECK(verify_tcore_congruences(10000).passed);
    CHECK_FALSE(ptt_mod2_series(7, 10).odd(9));
    CHECK(p_direct(MexSpec(7, 7), 9) % 2 == 0);
    CHECK(known_congruence_families().size() == 7);
}

TEST_CASE("verify_identities and verify_dissection")
{
    auto reports = verify_identities(1500);
    CHECK(reports.size() == 5);
    for (const auto& r : reports) {
        CAPTURE(r.theorem_id);
        CHECK(r.passed);
        check_report_invariant(r);
    }
    CHECK(verify_dissection(60).passed);
    CHECK(verify_tcore_oracle(18).passed);
}

TEST_CASE("scan_congruences examples")
{
    auto s5 = verified(scan_congruences(5, 10, 10000));
    CHECK(s5.count(2));
    CHECK(s5.count(6));

    auto c1 = scan_congruences(1, 2, 10000);
    CHECK(c1[1].status == ClaimStatus::VerifiedToBound);
    CHECK(c1[1].origin == ClaimOrigin::Established);
    CHECK(c1[0].status == ClaimStatus::Refuted);

    auto s3 = verified(scan_congruences(3, 4, 10000));
    CHECK(s3.count(2));
    CHECK(s3.count(3));

    auto single = scan_congruences(1, 1, 100);
    REQUIRE(single.size() == 1);
    CHECK(single[0].status == ClaimStatus::Refuted);
    CHECK(single[0].witness_n == 0U);
    CHECK(p_direct(MexSpec(1, 1), 2) == 1);
}

TEST_CASE("scan marks the proved residues established and leaves the rest candidates")
{
    auto claims = scan_congruences(5, 10, 5000);
    for (const auto& c : claims) {
        CAPTURE(c.residue);
        bool listed = c.residue == 2 || c.residue == 6;
        CHECK((c.origin == ClaimOrigin::Established) == listed);
        CHECK(c.checked_bound == 5000);
    }
    // 20n + 12 sits inside 10n + 2
    auto wider = scan_congruences(5, 20, 5000);
    CHECK(wider[12].origin == ClaimOrigin::Established);
    CHECK(wider[2].origin == ClaimOrigin::Established);
    CHECK(wider[3].origin == ClaimOrigin::Candidate);
}

TEST_CASE("scan witnesses and verified claims agree with enumeration")
{
    for (std::size_t t : {1U, 3U, 5U, 7U})
        for (std::size_t m = 1; m <= 12; ++m)
            for (const auto& c : scan_congruences(t, m, 3000)) {
                CAPTURE(t);
                CAPTURE(m);
                CAPTURE(c.residue);
                CHECK((c.status == ClaimStatus::Refuted) == c.witness_n.has_value());
                if (c.witness_index() && *c.witness_index() <= kEnumerationCeiling) {
                    auto idx = static_cast<unsigned>(*c.witness_index());
                    CHECK(p_direct(MexSpec(t, t), idx) % 2 == 1);
                }
                if (c.status == ClaimStatus::VerifiedToBound)
                    for (std::size_t idx = c.residue; idx <= 30; idx += m)
                        CHECK(p_direct(MexSpec(t, t), static_cast<unsigned>(idx)) % 2 == 0);
            }
}

TEST_CASE("suites")
{
    CHECK(parse_suite("all") == Suite::All);
    CHECK(parse_suite("crank-rank") == Suite::CrankRank);
    CHECK_FALSE(parse_suite("bogus").has_value());
    CHECK(suite_names().size() == 9);

    auto reports = run_suite(Suite::Corollaries, 3000);
    CHECK(reports.size() == 4);
    for (const auto& r : reports) {
        CHECK(r.passed);
        check_report_invariant(r);
    }
    auto cr = run_suite(Suite::CrankRank, 100000);
    REQUIRE(cr.size() == 1);
    CHECK(cr[0].range == "1 <= n <= 45");
    CHECK_THROWS_AS(run_suite(Suite::P11, 0), std::invalid_argument);
}

TEST_CASE("VerificationReport factories keep passed and counterexample in step")
{
    auto ok = VerificationReport::pass("x", "y");
    auto bad = VerificationReport::fail("x", "y", 17, "z");
    check_report_invariant(ok);
    check_report_invariant(bad);
    CHECK(*bad.counterexample == 17);
}
