#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qparity {

/* Outcome of one machine check. `passed` is false exactly when a
 * counterexample index is present. */
struct VerificationReport {
    std::string theorem_id;
    std::string range;
    bool passed = true;
    std::optional<std::uint64_t> counterexample;
    std::string detail;

    static VerificationReport pass(std::string id, std::string range, std::string detail = {});
    static VerificationReport fail(std::string id, std::string range, std::uint64_t witness,
                                   std::string detail);
};

enum class ClaimStatus { VerifiedToBound, Refuted };
enum class ClaimOrigin { Established, Candidate };

const char* to_string(ClaimStatus s);
const char* to_string(ClaimOrigin o);

/* "p_{t,t}(M n + j) is even for every index M n + j < checked_bound".
 * Evidence only. A refuted claim carries the first n (and index M n + j)
 * where the coefficient is odd. Established marks residues already covered
 * by a proved congruence list, so scan output never mixes those up with
 * new candidates. */
struct CongruenceClaim {
    std::size_t t = 1;
    std::size_t modulus = 1;
    std::size_t residue = 0;
    std::size_t checked_bound = 0;
    ClaimStatus status = ClaimStatus::VerifiedToBound;
    std::optional<std::uint64_t> witness_n;
    ClaimOrigin origin = ClaimOrigin::Candidate;

    std::optional<std::uint64_t> witness_index() const;
};

/// Residue lists j for p_{t,t}(2tn + j) = 0 mod 2 (the same lists hold for a_t).
struct CongruenceFamily {
    std::size_t t;
    std::vector<std::size_t> residues;
};
const std::vector<CongruenceFamily>& known_congruence_families();

enum class Characterization { P11, P33 };

/// n = k(3k +- 1) for some k >= 1, i.e. 12n + 1 is a perfect square.
bool is_pent_type(std::uint64_t n);
bool is_square_3n1(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t x);
bool is_prime(std::uint64_t p);

/// x is a quadratic non-residue mod p; 0 mod p is not. p must be a prime >= 5.
bool legendre_nonresidue(long long x, std::uint64_t p);

VerificationReport verify_characterization(Characterization which, std::size_t bound);
/// Throws ResourceLimitError for bound above the enumeration ceiling.
VerificationReport verify_crank_rank(unsigned bound);
VerificationReport verify_odd_progression(std::size_t bound);
VerificationReport verify_qnr_families(Characterization which, std::span<const std::uint64_t> primes,
                                       std::size_t bound);
VerificationReport verify_power4_families(unsigned max_m, std::size_t bound);
VerificationReport verify_theorem6(std::size_t bound);

/// The same residue lists applied to t-core counts a_t(n) mod 2.
VerificationReport verify_tcore_congruences(std::size_t bound);
/// acore_series against hook-length enumeration for t in {3,5,7}, n <= max_n.
VerificationReport verify_tcore_oracle(unsigned max_n);
/// Jacobi, pentagonal and psi product identities over Z, plus their Z/2 shadows.
std::vector<VerificationReport> verify_identities(std::size_t order);
/// Dissection identity for every residue mod 2t, t in {5, 7}.
VerificationReport verify_dissection(std::size_t order);

std::vector<CongruenceClaim> scan_congruences(std::size_t t, std::size_t modulus, std::size_t bound);

enum class Suite { All, P11, P33, CrankRank, Theorem6, Corollaries, Identities, TCore, Dissection };

std::optional<Suite> parse_suite(std::string_view name);
std::vector<std::string_view> suite_names();

/* Largest order the Integers-domain identity checks run at when a suite is
 * driven from a single limit; larger limits are clipped and the report's
 * range says so. */
inline constexpr std::size_t kIntegerIdentityCap = 20000;

std::vector<VerificationReport> run_suite(Suite suite, std::size_t limit);

}  // namespace qparity
