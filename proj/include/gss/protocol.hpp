#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gss/schemes.hpp"

namespace gss {

struct ShamirSpec {
    std::uint32_t t = 1;
    std::uint32_t n = 1;
    std::uint64_t prime = kProductionPrime;
};

struct KghSpec {
    std::uint32_t n = 1;
};

using SchemeSpec = std::variant<ShamirSpec, KghSpec>;

/// The full output of one dealer run. The descriptor and predicate are also
/// embedded in every share's metadata, so a combiner needs nothing else.
struct Dealing {
    SecretDescriptor descriptor;
    PredicateKind predicate = PredicateKind::any;
    std::vector<Share> shares;
};

struct VerificationReport {
    bool reconstructed = false;
    bool predicate_passed = false;
    bool accepted() const { return reconstructed && predicate_passed; }
    std::string reason;
};

/// Result of combining shares: at most one of the value members is set,
/// matching the descriptor kind; none is set when the verdict is rejected.
struct RecoveredSecret {
    std::optional<ColoredGraph> colored_graph; // structure / colored_graph
    std::optional<Coloring> coloring;          // coloring
    std::optional<BitPayload> payload;         // number_as_graph
    VerificationReport report;
};

/// Encode the colored graph and deal it under the chosen scheme. The shamir
/// path packs the digit value into field blocks; the kgh path shares the
/// digits in their native mixed radix.
Dealing share_colored_graph(const ColoredGraph& cg, const SchemeSpec& scheme,
                            PredicateKind predicate, RandomSource& rng);

/// Structure only (palette of 1): no color digits are dealt.
Dealing share_structure(const Graph& g, const SchemeSpec& scheme,
                        PredicateKind predicate, RandomSource& rng);

/// Deal only the color digits; the shares carry no structure information.
/// k = 1 is an error, there is nothing to share.
Dealing share_coloring(const Coloring& coloring, const SchemeSpec& scheme,
                       RandomSource& rng);

/// Deal the padded-graph image of a bit payload; reconstruction checks that
/// the padding region is still all zeros before accepting.
Dealing share_number_as_graph(const BitPayload& p, const SchemeSpec& scheme,
                              PredicateKind predicate, RandomSource& rng);

/// Combine shares, map the number back to its object, and verify it against
/// the embedded predicate. Structural problems (metadata mismatch, too few
/// shamir shares, missing kgh shares) throw; verification failures are
/// verdicts, not exceptions.
RecoveredSecret reconstruct_and_verify(const std::vector<Share>& shares);

/// A participant's componentwise shift of a kgh coloring share: every digit
/// becomes (digit + c) mod k. Rejects non-kgh or non-coloring shares.
Share shift_attack(const Share& share, std::uint32_t constant);

/// Deal the structure to group A and the coloring to group B under
/// independently derived randomness. Neither group alone learns the other's
/// part; combined they yield the colored graph.
std::pair<Dealing, Dealing> multi_secret_share(const ColoredGraph& cg,
                                               const SchemeSpec& group_a,
                                               const SchemeSpec& group_b,
                                               RandomSource& rng);

/// Pair a recovered structure with a recovered coloring and report whether
/// the coloring is proper for it.
std::pair<ColoredGraph, bool> multi_secret_combine(const Graph& structure,
                                                   const Coloring& coloring);

/// One Shamir dealing per level over a single participant set, with strictly
/// increasing thresholds: a subset of size s recovers exactly the levels with
/// threshold <= s. Participant i's composite share is the i-th share of every
/// level.
std::vector<Dealing> leveled_share(const std::vector<DigitString>& payloads,
                                   const std::vector<std::uint32_t>& thresholds,
                                   std::uint32_t n_participants,
                                   std::uint64_t prime, RandomSource& rng);

} // namespace gss
