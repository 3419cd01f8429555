#pragma once

#include <boost/rational.hpp>

#include "gss/schemes.hpp"

namespace gss {

using Rational = boost::rational<BigInt>;

/// Exact census of the structure digit space under a predicate.
struct CensusResult {
    std::uint32_t n = 1;
    PredicateKind predicate = PredicateKind::any;
    BigInt total;
    BigInt valid;
    Rational fraction; // valid / total, exact
};

inline constexpr std::uint32_t kCensusMaxVertices = 6;

/// Enumerate every lower-triangle bit pattern on n vertices and count the
/// graphs satisfying the predicate. Exhaustive, so n is capped.
CensusResult census(std::uint32_t n, const Predicate& predicate);

/// Labeled connected graph count by the standard subtraction recurrence:
/// C(1) = 1, C(n) = 2^(n(n-1)/2) - sum_{j<n} C(j)·binom(n-1, j-1)·2^((n-j)(n-j-1)/2).
/// Independent of census; the two must agree.
BigInt connected_count_recurrence(std::uint32_t n);

/// Smallest palette size admitting a proper coloring, by backtracking search
/// over assignments. Desk scale only (n <= 10).
std::uint32_t chromatic_number(const Graph& g);

/// Exhaustive secrecy audit: for every secret in the (possibly restricted)
/// space and every unauthorized share subset, the exact posterior over
/// secrets given the observed shares.
struct SecrecyAuditReport {
    BigInt space_size;              // full digit/field space cardinality
    std::size_t secret_count = 0;   // prior support size
    bool uniform_posteriors = false; // every posterior equals the prior
    bool reduced_entropy = false;    // prior support smaller than the space
    Rational max_posterior;          // largest P(secret | observation)
    std::size_t min_posterior_support = 0;
};

/// KGH audit over an explicit secret list (empty = the full digit space).
/// Unauthorized subsets are all proper nonempty participant subsets.
SecrecyAuditReport secrecy_audit_kgh(const KghParams& params,
                                     std::vector<std::vector<std::uint32_t>> secrets);

/// Shamir audit on single-block secrets over a tiny field (empty secret list
/// = every field element). Unauthorized subsets have fewer than t members.
SecrecyAuditReport secrecy_audit_shamir(std::uint64_t prime, std::uint32_t t,
                                        std::uint32_t n_participants,
                                        std::vector<std::uint64_t> secrets);

} // namespace gss
