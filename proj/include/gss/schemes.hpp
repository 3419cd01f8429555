#pragma once

#include <cstdint>
#include <vector>

#include "gss/codec.hpp"
#include "gss/random.hpp"

namespace gss {

/// Production field modulus (2^61 - 1, prime); secrets are chunked into
/// 60-bit blocks so every block is a field element.
inline constexpr std::uint64_t kProductionPrime = (std::uint64_t{1} << 61) - 1;

/// Tiny primes accepted for exhaustive secrecy checks; never for production
/// dealings, and share files carry a marker when one is used.
bool is_test_prime(std::uint64_t p);
bool is_supported_prime(std::uint64_t p);

/// Widest block (in bits) whose values all fit under p.
unsigned block_bits_for_prime(std::uint64_t p);

struct ShamirParams {
    std::uint32_t threshold = 1;
    std::uint32_t n_participants = 1;
    std::uint64_t prime = kProductionPrime;

    void validate() const;
    unsigned block_bits() const { return block_bits_for_prime(prime); }
};

struct KghParams {
    std::uint32_t n_participants = 1;
    std::vector<std::uint32_t> radices;

    void validate() const;
};

enum class SchemeKind { shamir, kgh };
enum class SecretKind { structure, coloring, colored_graph, number_as_graph };

const char* scheme_name(SchemeKind s);
const char* secret_kind_name(SecretKind k);
std::optional<SchemeKind> scheme_from_name(const std::string& name);
std::optional<SecretKind> secret_kind_from_name(const std::string& name);

/// What the dealt number means: which kind of object it decodes to and the
/// (n, k, l) needed to decode it. Coloring dealings deliberately carry no
/// structure information.
struct SecretDescriptor {
    SecretKind kind = SecretKind::colored_graph;
    std::uint32_t n = 1;
    std::uint32_t k = 1;
    std::size_t declared_length = 0; // number_as_graph only

    bool operator==(const SecretDescriptor&) const = default;
};

/// Per-position radices of the descriptor's digit sequence.
std::vector<std::uint32_t> descriptor_radices(const SecretDescriptor& d);
BigInt descriptor_space_size(const SecretDescriptor& d);

struct ShareMetadata {
    SchemeKind scheme = SchemeKind::kgh;
    std::uint32_t n_participants = 1;
    std::uint32_t threshold = 0;        // shamir only
    std::uint64_t prime = 0;            // shamir only
    std::vector<std::uint32_t> radices; // kgh only
    SecretDescriptor secret;
    PredicateKind predicate = PredicateKind::any;

    bool operator==(const ShareMetadata&) const = default;
};

/// One participant's piece. Exactly one payload vector is populated,
/// according to meta.scheme.
struct Share {
    std::uint32_t participant_index = 0; // 1-based, unique within a dealing
    ShareMetadata meta;
    std::vector<std::uint64_t> field_blocks; // shamir
    std::vector<std::uint32_t> digits;       // kgh

    bool operator==(const Share&) const = default;
};

/// Shamir threshold sharing: each block becomes the constant term of a random
/// degree-(t-1) polynomial, evaluated at x = participant index.
std::vector<Share> shamir_split(const std::vector<std::uint64_t>& blocks,
                                const ShamirParams& params,
                                ShareMetadata meta, RandomSource& rng);

/// Lagrange interpolation at x = 0 per block; needs at least t shares with
/// distinct indices and identical metadata.
std::vector<std::uint64_t> shamir_reconstruct(const std::vector<Share>& shares);

/// KGH additive sharing in the digits' native mixed radix: the first n-1
/// shares are uniform, the last makes the componentwise modular sum equal
/// the secret.
std::vector<Share> kgh_split(const std::vector<std::uint32_t>& digits,
                             const KghParams& params, ShareMetadata meta,
                             RandomSource& rng);

/// Componentwise modular sum; requires all n shares.
std::vector<std::uint32_t> kgh_reconstruct(const std::vector<Share>& shares);

// Mixed-radix helpers shared by packing and the secrecy audits.
BigInt mixed_radix_value(const std::vector<std::uint32_t>& digits,
                         const std::vector<std::uint32_t>& radices);
std::vector<std::uint32_t> mixed_radix_digits(BigInt value,
                                              const std::vector<std::uint32_t>& radices);
BigInt mixed_radix_space(const std::vector<std::uint32_t>& radices);

/// Number of blocks a value space needs; a deterministic function of the
/// space so dealer and combiner always agree.
std::size_t block_count_for_space(const BigInt& space, unsigned block_bits);

std::vector<std::uint64_t> pack_value_to_blocks(const BigInt& value,
                                                const BigInt& space,
                                                unsigned block_bits);

/// Inverse of pack_value_to_blocks; throws CodecError when the decoded value
/// falls outside the space (the reconstructed secret is not a valid point).
BigInt unpack_blocks_to_value(const std::vector<std::uint64_t>& blocks,
                              const BigInt& space, unsigned block_bits);

/// Digit-string convenience wrappers over the value packers.
std::vector<std::uint64_t> pack_digits_to_blocks(const DigitString& d,
                                                 unsigned block_bits = 60);
DigitString unpack_blocks_to_digits(const std::vector<std::uint64_t>& blocks,
                                    std::uint32_t n, std::uint32_t k,
                                    unsigned block_bits = 60);

} // namespace gss
