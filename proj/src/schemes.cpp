#include "gss/schemes.hpp"

#include <algorithm>
#include <set>

namespace gss {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b; // p < 2^62, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) {
            r = mul_mod(r, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

// p is prime, a != 0
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a, p - 2, p);
}

void check_consistent(const std::vector<Share>& shares) {
    if (shares.empty()) {
        throw SchemeError("no shares given");
    }
    std::set<std::uint32_t> indices;
    for (const Share& s : shares) {
        if (!(s.meta == shares.front().meta)) {
            throw SchemeError("share metadata mismatch");
        }
        if (s.participant_index < 1 ||
            s.participant_index > s.meta.n_participants) {
            throw SchemeError("participant index out of range");
        }
        if (!indices.insert(s.participant_index).second) {
            throw SchemeError("duplicate participant index");
        }
    }
}

} // namespace

bool is_test_prime(std::uint64_t p) {
    return p == 5 || p == 7 || p == 11;
}

bool is_supported_prime(std::uint64_t p) {
    return p == kProductionPrime || is_test_prime(p);
}

unsigned block_bits_for_prime(std::uint64_t p) {
    unsigned bits = 0;
    while ((std::uint64_t{1} << (bits + 1)) <= p && bits + 1 < 64) {
        ++bits;
    }
    return bits;
}

void ShamirParams::validate() const {
    if (!is_supported_prime(prime)) {
        throw SchemeError("unsupported prime modulus");
    }
    if (threshold < 1 || n_participants < threshold) {
        throw SchemeError("need 1 <= t <= n_participants");
    }
    if (n_participants >= prime) {
        throw SchemeError("too many participants for the field");
    }
}

void KghParams::validate() const {
    if (n_participants < 1) {
        throw SchemeError("need at least one participant");
    }
    for (std::uint32_t r : radices) {
        if (r < 1) {
            throw SchemeError("radix must be at least 1");
        }
    }
}

const char* scheme_name(SchemeKind s) {
    return s == SchemeKind::shamir ? "shamir" : "kgh";
}

const char* secret_kind_name(SecretKind k) {
    switch (k) {
    case SecretKind::structure: return "structure";
    case SecretKind::coloring: return "coloring";
    case SecretKind::colored_graph: return "colored_graph";
    case SecretKind::number_as_graph: return "number_as_graph";
    }
    return "colored_graph";
}

std::optional<SchemeKind> scheme_from_name(const std::string& name) {
    if (name == "shamir") return SchemeKind::shamir;
    if (name == "kgh") return SchemeKind::kgh;
    return std::nullopt;
}

std::optional<SecretKind> secret_kind_from_name(const std::string& name) {
    if (name == "structure") return SecretKind::structure;
    if (name == "coloring") return SecretKind::coloring;
    if (name == "colored_graph") return SecretKind::colored_graph;
    if (name == "number_as_graph") return SecretKind::number_as_graph;
    return std::nullopt;
}

std::vector<std::uint32_t> descriptor_radices(const SecretDescriptor& d) {
    switch (d.kind) {
    case SecretKind::structure:
    case SecretKind::number_as_graph:
        return std::vector<std::uint32_t>(Graph::triangle_size(d.n), 2);
    case SecretKind::coloring:
        return std::vector<std::uint32_t>(d.n, d.k);
    case SecretKind::colored_graph:
        return digit_radices(d.n, d.k);
    }
    return {};
}

BigInt descriptor_space_size(const SecretDescriptor& d) {
    return mixed_radix_space(descriptor_radices(d));
}

std::vector<Share> shamir_split(const std::vector<std::uint64_t>& blocks,
                                const ShamirParams& params,
                                ShareMetadata meta, RandomSource& rng) {
    params.validate();
    for (std::uint64_t b : blocks) {
        if (b >= params.prime) {
            throw SchemeError("secret block not a field element");
        }
    }
    meta.scheme = SchemeKind::shamir;
    meta.n_participants = params.n_participants;
    meta.threshold = params.threshold;
    meta.prime = params.prime;
    meta.radices.clear();

    std::vector<Share> shares(params.n_participants);
    for (std::uint32_t i = 0; i < params.n_participants; ++i) {
        shares[i].participant_index = i + 1;
        shares[i].meta = meta;
        shares[i].field_blocks.resize(blocks.size());
    }
    std::vector<std::uint64_t> coeffs(params.threshold);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        coeffs[0] = blocks[b];
        for (std::uint32_t c = 1; c < params.threshold; ++c) {
            coeffs[c] = rng.uniform_below(params.prime);
        }
        for (std::uint32_t i = 0; i < params.n_participants; ++i) {
            const std::uint64_t x = i + 1;
            std::uint64_t y = 0;
            for (std::uint32_t c = params.threshold; c-- > 0;) {
                y = add_mod(mul_mod(y, x, params.prime), coeffs[c], params.prime);
            }
            shares[i].field_blocks[b] = y;
        }
    }
    return shares;
}

std::vector<std::uint64_t> shamir_reconstruct(const std::vector<Share>& shares) {
    check_consistent(shares);
    const ShareMetadata& meta = shares.front().meta;
    if (meta.scheme != SchemeKind::shamir) {
        throw SchemeError("not shamir shares");
    }
    const std::uint64_t p = meta.prime;
    const std::uint32_t t = meta.threshold;
    if (shares.size() < t) {
        throw SchemeError("insufficient shares: need at least the threshold");
    }
    const std::size_t nblocks = shares.front().field_blocks.size();
    for (const Share& s : shares) {
        if (s.field_blocks.size() != nblocks) {
            throw SchemeError("share payload length mismatch");
        }
    }
    // Any t shares determine the polynomial; use the first t given.
    std::vector<std::uint64_t> lambda(t);
    for (std::uint32_t i = 0; i < t; ++i) {
        const std::uint64_t xi = shares[i].participant_index % p;
        std::uint64_t num = 1, den = 1;
        for (std::uint32_t j = 0; j < t; ++j) {
            if (j == i) {
                continue;
            }
            const std::uint64_t xj = shares[j].participant_index % p;
            num = mul_mod(num, xj, p);
            den = mul_mod(den, sub_mod(xj, xi, p), p);
        }
        lambda[i] = mul_mod(num, inv_mod(den, p), p);
    }
    std::vector<std::uint64_t> blocks(nblocks, 0);
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::uint64_t acc = 0;
        for (std::uint32_t i = 0; i < t; ++i) {
            acc = add_mod(acc, mul_mod(lambda[i], shares[i].field_blocks[b], p), p);
        }
        blocks[b] = acc;
    }
    return blocks;
}

std::vector<Share> kgh_split(const std::vector<std::uint32_t>& digits,
                             const KghParams& params, ShareMetadata meta,
                             RandomSource& rng) {
    params.validate();
    if (digits.size() != params.radices.size()) {
        throw SchemeError("digit count does not match radices");
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= params.radices[i]) {
            throw SchemeError("digit out of radix range");
        }
    }
    meta.scheme = SchemeKind::kgh;
    meta.n_participants = params.n_participants;
    meta.threshold = 0;
    meta.prime = 0;
    meta.radices = params.radices;

    std::vector<Share> shares(params.n_participants);
    for (std::uint32_t i = 0; i < params.n_participants; ++i) {
        shares[i].participant_index = i + 1;
        shares[i].meta = meta;
        shares[i].digits.resize(digits.size());
    }
    for (std::size_t pos = 0; pos < digits.size(); ++pos) {
        const std::uint32_t r = params.radices[pos];
        std::uint64_t sum = 0;
        for (std::uint32_t i = 0; i + 1 < params.n_participants; ++i) {
            std::uint32_t d = rng.uniform_digit(r);
            shares[i].digits[pos] = d;
            sum += d;
        }
        const std::uint32_t last =
            static_cast<std::uint32_t>((digits[pos] + r - sum % r) % r);
        shares[params.n_participants - 1].digits[pos] = last;
    }
    return shares;
}

std::vector<std::uint32_t> kgh_reconstruct(const std::vector<Share>& shares) {
    check_consistent(shares);
    const ShareMetadata& meta = shares.front().meta;
    if (meta.scheme != SchemeKind::kgh) {
        throw SchemeError("not kgh shares");
    }
    if (shares.size() != meta.n_participants) {
        throw SchemeError("kgh needs all n shares");
    }
    const std::size_t len = meta.radices.size();
    for (const Share& s : shares) {
        if (s.digits.size() != len) {
            throw SchemeError("share payload length mismatch");
        }
    }
    std::vector<std::uint32_t> out(len, 0);
    for (std::size_t pos = 0; pos < len; ++pos) {
        std::uint64_t sum = 0;
        for (const Share& s : shares) {
            sum += s.digits[pos];
        }
        out[pos] = static_cast<std::uint32_t>(sum % meta.radices[pos]);
    }
    return out;
}

BigInt mixed_radix_value(const std::vector<std::uint32_t>& digits,
                         const std::vector<std::uint32_t>& radices) {
    if (digits.size() != radices.size()) {
        throw CodecError("digit count does not match radices");
    }
    BigInt v = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= radices[i]) {
            throw CodecError("digit out of radix range");
        }
        v = v * radices[i] + digits[i];
    }
    return v;
}

std::vector<std::uint32_t> mixed_radix_digits(BigInt value,
                                              const std::vector<std::uint32_t>& radices) {
    if (value < 0 || value >= mixed_radix_space(radices)) {
        throw CodecError("value out of digit space");
    }
    std::vector<std::uint32_t> digits(radices.size(), 0);
    for (std::size_t i = radices.size(); i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(value % radices[i]);
        value /= radices[i];
    }
    return digits;
}

BigInt mixed_radix_space(const std::vector<std::uint32_t>& radices) {
    BigInt space = 1;
    for (std::uint32_t r : radices) {
        space *= r;
    }
    return space;
}

std::size_t block_count_for_space(const BigInt& space, unsigned block_bits) {
    if (space <= 1) {
        return 1;
    }
    const std::size_t bits = boost::multiprecision::msb(BigInt(space - 1)) + 1;
    return (bits + block_bits - 1) / block_bits;
}

std::vector<std::uint64_t> pack_value_to_blocks(const BigInt& value,
                                                const BigInt& space,
                                                unsigned block_bits) {
    if (value < 0 || value >= space) {
        throw CodecError("value out of digit space");
    }
    const std::size_t count = block_count_for_space(space, block_bits);
    std::vector<std::uint64_t> blocks(count, 0);
    BigInt rest = value;
    const BigInt mask = (BigInt(1) << block_bits) - 1;
    for (std::size_t i = count; i-- > 0;) {
        blocks[i] = static_cast<std::uint64_t>(rest & mask);
        rest >>= block_bits;
    }
    return blocks;
}

BigInt unpack_blocks_to_value(const std::vector<std::uint64_t>& blocks,
                              const BigInt& space, unsigned block_bits) {
    if (blocks.size() != block_count_for_space(space, block_bits)) {
        throw CodecError("block count does not match digit space");
    }
    BigInt v = 0;
    for (std::uint64_t b : blocks) {
        if (block_bits < 64 && b >> block_bits) {
            throw CodecError("block exceeds block width");
        }
        v = (v << block_bits) | b;
    }
    if (v >= space) {
        throw CodecError("value out of digit space");
    }
    return v;
}

std::vector<std::uint64_t> pack_digits_to_blocks(const DigitString& d,
                                                 unsigned block_bits) {
    return pack_value_to_blocks(digits_to_integer(d),
                                digit_space_size(d.n, d.k), block_bits);
}

DigitString unpack_blocks_to_digits(const std::vector<std::uint64_t>& blocks,
                                    std::uint32_t n, std::uint32_t k,
                                    unsigned block_bits) {
    const BigInt v =
        unpack_blocks_to_value(blocks, digit_space_size(n, k), block_bits);
    return integer_to_digits(v, n, k);
}

} // namespace gss
