#include "qparity/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qparity/errors.hpp"
#include "qparity/genfun.hpp"
#include "qparity/partitions.hpp"
#include "qparity/series.hpp"

namespace qparity {

namespace {

constexpr std::array<std::uint64_t, 5> kDefaultQnrPrimes{5, 7, 11, 13, 17};
constexpr unsigned kDefaultPower4Max = 6;
constexpr unsigned kTcoreOracleMax = 25;

std::string below(std::size_t bound)
{
    return "indices < " + std::to_string(bound);
}

std::size_t t_of(Characterization which)
{
    return which == Characterization::P11 ? 1 : 3;
}

const char* name_of(Characterization which)
{
    return which == Characterization::P11 ? "p11" : "p33";
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    unsigned __int128 result = 1;
    unsigned __int128 b = base % mod;
    while (exp) {
        if (exp & 1)
            result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

/* First index M n + j < bound with an odd coefficient, if any. */
std::optional<std::uint64_t> first_odd(const TruncatedSeries& s, std::size_t modulus,
                                       std::size_t residue, std::size_t bound)
{
    bound = std::min(bound, s.order());
    for (std::size_t idx = residue; idx < bound; idx += modulus)
        if (s.odd(idx))
            return idx;
    return std::nullopt;
}

/* Residues r in [1, p-1] whose associated value is a non-residue mod p:
 * 12r + 1 for p11, 3r + 1 for p33. */
std::vector<std::size_t> qnr_residues(Characterization which, std::uint64_t p)
{
    std::vector<std::size_t> out;
    const long long scale = which == Characterization::P11 ? 12 : 3;
    for (std::uint64_t r = 1; r < p; ++r)
        if (legendre_nonresidue(scale * static_cast<long long>(r) + 1, p))
            out.push_back(r);
    return out;
}

struct Progression {
    std::uint64_t modulus;
    std::uint64_t residue;
};

/* The three progressions of the 4^m families for a given m. */
std::array<Progression, 3> power4_progressions(unsigned m)
{
    std::uint64_t pow4 = std::uint64_t{1} << (2 * m);
    return {{{4 * pow4, (7 * pow4 - 1) / 3},
             {4 * pow4, (10 * pow4 - 1) / 3},
             {8 * pow4, (13 * pow4 - 1) / 3}}};
}

/* Whether {M n + j} sits inside a progression already proved even for p_{t,t}. */
bool covered_by_proof(std::size_t t, std::size_t modulus, std::size_t residue)
{
    auto inside = [&](std::uint64_t pm, std::uint64_t pr) {
        return modulus % pm == 0 && residue % pm == pr;
    };
    for (const auto& fam : known_congruence_families())
        if (fam.t == t)
            for (auto j : fam.residues)
                if (inside(2 * t, j))
                    return true;
    if (t == 1 && inside(2, 1))
        return true;
    if (t == 1 || t == 3) {
        auto which = t == 1 ? Characterization::P11 : Characterization::P33;
        for (std::uint64_t p = 5; p <= modulus; ++p)
            if (modulus % p == 0 && is_prime(p))
                for (auto r : qnr_residues(which, p))
                    if (inside(p, r))
                        return true;
    }
    if (t == 3)
        for (unsigned m = 0; m < 30 && (std::uint64_t{4} << (2 * m)) <= modulus; ++m)
            for (auto prog : power4_progressions(m))
                if (inside(prog.modulus, prog.residue))
                    return true;
    return false;
}

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

VerificationReport compare_series(std::string id, const TruncatedSeries& lhs,
                                  const TruncatedSeries& rhs, std::string what)
{
    std::string range = "order " + std::to_string(lhs.order()) + ", " + to_string(lhs.domain());
    for (std::size_t k = 0; k < lhs.order(); ++k)
        if (lhs.coefficient(k) != rhs.coefficient(k))
            return VerificationReport::fail(std::move(id), std::move(range), k,
                                            what + ": coefficients differ at q^" + std::to_string(k));
    return VerificationReport::pass(std::move(id), std::move(range), std::move(what));
}

}  // namespace

/* --- records ---------------------------------------------------------- */

VerificationReport VerificationReport::pass(std::string id, std::string range, std::string detail)
{
    return {std::move(id), std::move(range), true, std::nullopt, std::move(detail)};
}

VerificationReport VerificationReport::fail(std::string id, std::string range, std::uint64_t witness,
                                            std::string detail)
{
    return {std::move(id), std::move(range), false, witness, std::move(detail)};
}

const char* to_string(ClaimStatus s)
{
    return s == ClaimStatus::VerifiedToBound ? "verified-to-bound" : "refuted";
}

const char* to_string(ClaimOrigin o)
{
    return o == ClaimOrigin::Established ? "established" : "candidate";
}

std::optional<std::uint64_t> CongruenceClaim::witness_index() const
{
    if (!witness_n)
        return std::nullopt;
    return *witness_n * modulus + residue;
}

const std::vector<CongruenceFamily>& known_congruence_families()
{
    static const std::vector<CongruenceFamily> families{
        {5, {2, 6}},
        {7, {7, 9, 13}},
        {11, {2, 8, 12, 14, 16}},
        {13, {2, 10, 16, 18, 20, 22}},
        {17, {11, 15, 17, 19, 25, 27, 29, 33}},
        {19, {2, 8, 10, 20, 24, 28, 30, 32, 34}},
        {23, {11, 15, 21, 23, 29, 31, 35, 39, 41, 43, 45}},
    };
    return families;
}

/* --- predicates ------------------------------------------------------- */

std::uint64_t isqrt(std::uint64_t x)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r > x / r)
        --r;
    while (r + 1 <= x / (r + 1))
        ++r;
    return r;
}

bool is_pent_type(std::uint64_t n)
{
    if (n == 0)
        return false;
    std::uint64_t v = 12 * n + 1;
    std::uint64_t r = isqrt(v);
    return r * r == v;
}

bool is_square_3n1(std::uint64_t n)
{
    std::uint64_t v = 3 * n + 1;
    std::uint64_t r = isqrt(v);
    return r * r == v;
}

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

bool legendre_nonresidue(long long x, std::uint64_t p)
{
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("legendre_nonresidue needs a prime p >= 5, got " +
                                    std::to_string(p));
    auto sp = static_cast<long long>(p);
    auto r = static_cast<std::uint64_t>(((x % sp) + sp) % sp);
    if (r == 0)
        return false;
    return powmod(r, (p - 1) / 2, p) == p - 1;
}

/* --- theorem checks --------------------------------------------------- */

VerificationReport verify_characterization(Characterization which, std::size_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("bound must be at least 1");
    std::string id = std::string(name_of(which)) + "-parity";
    std::string range = "1 <= n < " + std::to_string(bound);
    auto series = ptt_mod2_series(t_of(which), bound);
    auto predicate = which == Characterization::P11 ? is_pent_type : is_square_3n1;
    for (std::size_t n = 1; n < bound; ++n)
        if (series.odd(n) != predicate(n))
            return VerificationReport::fail(std::move(id), std::move(range), n,
                                            "parity disagrees with the characterization");
    return VerificationReport::pass(std::move(id), std::move(range));
}

VerificationReport verify_crank_rank(unsigned bound)
{
    if (bound > kEnumerationCeiling)
        throw ResourceLimitError("crank/rank check needs enumeration up to n=" +
                                 std::to_string(bound) + ", ceiling is " +
                                 std::to_string(kEnumerationCeiling));
    std::string range = "1 <= n <= " + std::to_string(bound);
    const MexSpec s11(1, 1);
    const MexSpec s33(3, 3);
    for (unsigned n = 1; n <= bound; ++n) {
        std::uint64_t m11 = 0, m33 = 0, crank_nonneg = 0, rank_ge = 0;
        for (const auto& lambda : enumerate_partitions(n)) {
            auto mex1 = mex(lambda, s11);
            auto mex3 = mex(lambda, s33);
            m11 += mex1 % 2 == 1;
            m33 += mex3 % 6 == 3;
            crank_nonneg += crank(lambda) >= 0;
            rank_ge += rank(lambda) >= -1;
        }
        if (m11 != crank_nonneg)
            return VerificationReport::fail("crank-rank", range, n,
                                            "p11=" + std::to_string(m11) +
                                                " but crank>=0 count=" + std::to_string(crank_nonneg));
        if (m33 != rank_ge)
            return VerificationReport::fail("crank-rank", range, n,
                                            "p33=" + std::to_string(m33) +
                                                " but rank>=-1 count=" + std::to_string(rank_ge));
    }
    return VerificationReport::pass("crank-rank", std::move(range));
}

VerificationReport verify_odd_progression(std::size_t bound)
{
    auto series = ptt_mod2_series(1, bound);
    if (auto idx = first_odd(series, 2, 1, bound))
        return VerificationReport::fail("p11-odd-progression", below(bound), *idx,
                                        "odd coefficient at an odd index");
    return VerificationReport::pass("p11-odd-progression", below(bound));
}

VerificationReport verify_qnr_families(Characterization which, std::span<const std::uint64_t> primes,
                                       std::size_t bound)
{
    std::string id = std::string(name_of(which)) + "-qnr";
    std::ostringstream range;
    range << "p in {";
    for (std::size_t i = 0; i < primes.size(); ++i)
        range << (i ? "," : "") << primes[i];
    range << "}, " << below(bound);

    auto series = ptt_mod2_series(t_of(which), bound);
    std::ostringstream detail;
    for (auto p : primes) {
        auto residues = qnr_residues(which, p);
        detail << (detail.tellp() > 0 ? "; " : "") << "p=" << p << " r={" << join(residues) << "}";
        for (auto r : residues)
            if (auto idx = first_odd(series, p, r, bound))
                return VerificationReport::fail(std::move(id), range.str(), *idx,
                                                "odd coefficient in progression " +
                                                    std::to_string(p) + "n+" + std::to_string(r));
    }
    return VerificationReport::pass(std::move(id), range.str(), detail.str());
}

VerificationReport verify_power4_families(unsigned max_m, std::size_t bound)
{
    if (max_m > 28)
        throw std::invalid_argument("power-of-4 families limited to m <= 28");
    std::string range = "0 <= m <= " + std::to_string(max_m) + ", " + below(bound);
    auto series = ptt_mod2_series(3, bound);
    for (unsigned m = 0; m <= max_m; ++m)
        for (auto prog : power4_progressions(m))
            if (auto idx = first_odd(series, prog.modulus, prog.residue, bound))
                return VerificationReport::fail("p33-power4", range, *idx,
                                                "odd coefficient in progression " +
                                                    std::to_string(prog.modulus) + "n+" +
                                                    std::to_string(prog.residue));
    return VerificationReport::pass("p33-power4", std::move(range));
}

VerificationReport verify_theorem6(std::size_t bound)
{
    std::string range = "t in {5,7,11,13,17,19,23}, " + below(bound);
    for (const auto& fam : known_congruence_families()) {
        auto series = ptt_mod2_series(fam.t, bound);
        for (auto j : fam.residues)
            if (auto idx = first_odd(series, 2 * fam.t, j, bound))
                return VerificationReport::fail("ptt-congruences", range, *idx,
                                                "p_{" + std::to_string(fam.t) + "," +
                                                    std::to_string(fam.t) + "} odd in progression " +
                                                    std::to_string(2 * fam.t) + "n+" +
                                                    std::to_string(j));
    }
    return VerificationReport::pass("ptt-congruences", std::move(range));
}

VerificationReport verify_tcore_congruences(std::size_t bound)
{
    std::string range = "t in {5,7,11,13,17,19,23}, " + below(bound);
    for (const auto& fam : known_congruence_families()) {
        auto series = acore_series(fam.t, bound, Domain::Mod2);
        for (auto j : fam.residues)
            if (auto idx = first_odd(series, 2 * fam.t, j, bound))
                return VerificationReport::fail("tcore-congruences", range, *idx,
                                                "a_" + std::to_string(fam.t) +
                                                    " odd in progression " +
                                                    std::to_string(2 * fam.t) + "n+" +
                                                    std::to_string(j));
    }
    return VerificationReport::pass("tcore-congruences", std::move(range));
}

VerificationReport verify_tcore_oracle(unsigned max_n)
{
    std::string range = "t in {3,5,7}, 0 <= n <= " + std::to_string(max_n);
    for (unsigned t : {3U, 5U, 7U}) {
        auto series = acore_series(t, max_n + 1);
        for (unsigned n = 0; n <= max_n; ++n) {
            auto direct = a_t_direct(t, n);
            if (series.coefficient(n) != direct)
                return VerificationReport::fail("tcore-oracle", range, n,
                                                "a_" + std::to_string(t) + ": series " +
                                                    series.coefficient(n).get_str() +
                                                    " vs enumeration " + std::to_string(direct));
        }
    }
    return VerificationReport::pass("tcore-oracle", std::move(range));
}

std::vector<VerificationReport> verify_identities(std::size_t order)
{
    std::vector<VerificationReport> out;
    auto euler = euler_product(1, 1, order);
    out.push_back(compare_series("identity-euler", euler_pentagonal(order), euler,
                                 "pentagonal sum = (q;q)"));
    out.push_back(compare_series("identity-jacobi", jacobi_cube(order),
                                 series_mul(series_mul(euler, euler), euler),
                                 "jacobi sum = (q;q)^3"));
    out.push_back(compare_series("identity-psi", theta_psi(order),
                                 series_mul(euler_product(2, 2, order), series_recip(euler)),
                                 "psi = (q^2;q^2)^2/(q;q)"));
    out.push_back(compare_series("identity-square-mod2", reduce_mod2(series_mul(euler, euler)),
                                 reduce_mod2(euler_product(2, 1, order)),
                                 "(q;q)^2 = (q^2;q^2) mod 2"));
    out.push_back(compare_series("identity-jacobi-mod2", reduce_mod2(jacobi_cube(order)),
                                 reduce_mod2(theta_psi(order)), "(q;q)^3 = psi mod 2"));
    return out;
}

VerificationReport verify_dissection(std::size_t order)
{
    std::string range = "t in {5,7}, every r < 2t, order " + std::to_string(order);
    for (std::size_t t : {5U, 7U})
        for (std::size_t r = 0; r < 2 * t; ++r)
            if (!dissection_identity_check(t, r, order))
                return VerificationReport::fail("dissection", range, r,
                                                "identity fails for t=" + std::to_string(t) +
                                                    " r=" + std::to_string(r));
    return VerificationReport::pass("dissection", std::move(range));
}

/* --- scanner ---------------------------------------------------------- */

std::vector<CongruenceClaim> scan_congruences(std::size_t t, std::size_t modulus, std::size_t bound)
{
    if (modulus == 0)
        throw std::invalid_argument("scan modulus must be positive");
    if (bound == 0)
        throw std::invalid_argument("scan bound must be positive");
    auto series = ptt_mod2_series(t, bound);
    std::vector<CongruenceClaim> claims;
    claims.reserve(modulus);
    for (std::size_t j = 0; j < modulus; ++j) {
        CongruenceClaim c;
        c.t = t;
        c.modulus = modulus;
        c.residue = j;
        c.checked_bound = bound;
        c.origin = covered_by_proof(t, modulus, j) ? ClaimOrigin::Established : ClaimOrigin::Candidate;
        if (auto idx = first_odd(series, modulus, j, bound)) {
            c.status = ClaimStatus::Refuted;
            c.witness_n = (*idx - j) / modulus;
        }
        claims.push_back(c);
    }
    return claims;
}

/* --- suites ----------------------------------------------------------- */

namespace {

constexpr std::array<std::pair<std::string_view, Suite>, 9> kSuites{{
    {"all", Suite::All},
    {"p11", Suite::P11},
    {"p33", Suite::P33},
    {"crank-rank", Suite::CrankRank},
    {"theorem6", Suite::Theorem6},
    {"corollaries", Suite::Corollaries},
    {"identities", Suite::Identities},
    {"tcore", Suite::TCore},
    {"dissection", Suite::Dissection},
}};

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more)
{
    for (auto& r : more)
        out.push_back(std::move(r));
}

std::vector<VerificationReport> run_one(Suite suite, std::size_t limit)
{
    switch (suite) {
    case Suite::P11:
        return {verify_characterization(Characterization::P11, limit)};
    case Suite::P33:
        return {verify_characterization(Characterization::P33, limit)};
    case Suite::CrankRank:
        return {verify_crank_rank(
            static_cast<unsigned>(std::min<std::size_t>(limit, kEnumerationCeiling)))};
    case Suite::Theorem6:
        return {verify_theorem6(limit)};
    case Suite::Corollaries:
        return {verify_odd_progression(limit),
                verify_qnr_families(Characterization::P11, kDefaultQnrPrimes, limit),
                verify_qnr_families(Characterization::P33, kDefaultQnrPrimes, limit),
                verify_power4_families(kDefaultPower4Max, limit)};
    case Suite::Identities:
        return verify_identities(std::min(limit, kIntegerIdentityCap));
    case Suite::TCore:
        return {verify_tcore_oracle(kTcoreOracleMax), verify_tcore_congruences(limit)};
    case Suite::Dissection:
        // order of the dissected series, so the t = 7 source stays within limit
        return {verify_dissection(std::max<std::size_t>(1, limit / 14))};
    case Suite::All:
        break;
    }
    std::vector<VerificationReport> out;
    for (auto s : {Suite::P11, Suite::P33, Suite::CrankRank, Suite::Theorem6, Suite::Corollaries,
                   Suite::Identities, Suite::TCore, Suite::Dissection})
        append(out, run_one(s, limit));
    return out;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name)
{
    for (const auto& [key, suite] : kSuites)
        if (key == name)
            return suite;
    return std::nullopt;
}

std::vector<std::string_view> suite_names()
{
    std::vector<std::string_view> names;
    for (const auto& entry : kSuites)
        names.push_back(entry.first);
    return names;
}

std::vector<VerificationReport> run_suite(Suite suite, std::size_t limit)
{
    if (limit == 0)
        throw std::invalid_argument("limit must be at least 1");
    return run_one(suite, limit);
}

}  // namespace qparity
