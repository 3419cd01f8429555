#include "gss/protocol.hpp"

namespace gss {

namespace {

Dealing deal_digits(const std::vector<std::uint32_t>& flat,
                    const SecretDescriptor& desc, PredicateKind predicate,
                    const SchemeSpec& scheme, RandomSource& rng) {
    Dealing out;
    out.descriptor = desc;
    out.predicate = predicate;

    ShareMetadata meta;
    meta.secret = desc;
    meta.predicate = predicate;

    const std::vector<std::uint32_t> radices = descriptor_radices(desc);
    if (const auto* sh = std::get_if<ShamirSpec>(&scheme)) {
        ShamirParams params{sh->t, sh->n, sh->prime};
        const BigInt value = mixed_radix_value(flat, radices);
        const std::vector<std::uint64_t> blocks = pack_value_to_blocks(
            value, mixed_radix_space(radices), params.block_bits());
        out.shares = shamir_split(blocks, params, meta, rng);
    } else {
        KghParams params{std::get<KghSpec>(scheme).n, radices};
        out.shares = kgh_split(flat, params, meta, rng);
    }
    return out;
}

VerificationReport rejected(std::string reason, bool reconstructed) {
    VerificationReport r;
    r.reconstructed = reconstructed;
    r.predicate_passed = false;
    r.reason = std::move(reason);
    return r;
}

} // namespace

Dealing share_colored_graph(const ColoredGraph& cg, const SchemeSpec& scheme,
                            PredicateKind predicate, RandomSource& rng) {
    const DigitString d = encode_graph(cg);
    SecretDescriptor desc;
    desc.kind = SecretKind::colored_graph;
    desc.n = d.n;
    desc.k = d.k;
    return deal_digits(d.flatten(), desc, predicate, scheme, rng);
}

Dealing share_structure(const Graph& g, const SchemeSpec& scheme,
                        PredicateKind predicate, RandomSource& rng) {
    SecretDescriptor desc;
    desc.kind = SecretKind::structure;
    desc.n = g.vertex_count();
    desc.k = 1;
    std::vector<std::uint32_t> flat(g.bits().begin(), g.bits().end());
    return deal_digits(flat, desc, predicate, scheme, rng);
}

Dealing share_coloring(const Coloring& coloring, const SchemeSpec& scheme,
                       RandomSource& rng) {
    if (coloring.palette_size() < 2) {
        throw ProtocolError("palette of size 1 carries no secret to share");
    }
    SecretDescriptor desc;
    desc.kind = SecretKind::coloring;
    desc.n = coloring.size();
    desc.k = coloring.palette_size();
    return deal_digits(coloring.colors(), desc, PredicateKind::any, scheme, rng);
}

Dealing share_number_as_graph(const BitPayload& p, const SchemeSpec& scheme,
                              PredicateKind predicate, RandomSource& rng) {
    const Graph g = number_to_graph(p);
    SecretDescriptor desc;
    desc.kind = SecretKind::number_as_graph;
    desc.n = g.vertex_count();
    desc.k = 1;
    desc.declared_length = p.declared_length();
    std::vector<std::uint32_t> flat(g.bits().begin(), g.bits().end());
    return deal_digits(flat, desc, predicate, scheme, rng);
}

RecoveredSecret reconstruct_and_verify(const std::vector<Share>& shares) {
    if (shares.empty()) {
        throw SchemeError("no shares given");
    }
    const ShareMetadata& meta = shares.front().meta;
    const SecretDescriptor& desc = meta.secret;
    const std::vector<std::uint32_t> radices = descriptor_radices(desc);

    RecoveredSecret result;

    std::vector<std::uint32_t> flat;
    if (meta.scheme == SchemeKind::shamir) {
        const std::vector<std::uint64_t> blocks = shamir_reconstruct(shares);
        BigInt value;
        try {
            value = unpack_blocks_to_value(blocks, mixed_radix_space(radices),
                                           block_bits_for_prime(meta.prime));
        } catch (const CodecError&) {
            result.report = rejected("out of secret space", false);
            return result;
        }
        flat = mixed_radix_digits(value, radices);
    } else {
        flat = kgh_reconstruct(shares);
    }

    const Predicate predicate{meta.predicate, std::nullopt};
    switch (desc.kind) {
    case SecretKind::structure:
    case SecretKind::colored_graph: {
        ColoredGraph cg = decode_graph(unflatten_digits(flat, desc.n, desc.k));
        result.report.reconstructed = true;
        result.report.predicate_passed = evaluate_predicate(predicate, cg);
        result.report.reason = result.report.predicate_passed
                                   ? "ok"
                                   : std::string("predicate failed: ") +
                                         predicate_name(meta.predicate);
        if (result.report.accepted()) {
            result.colored_graph = std::move(cg);
        }
        return result;
    }
    case SecretKind::coloring: {
        Coloring c(desc.k, flat);
        result.report.reconstructed = true;
        // Structural predicates need the graph, which coloring shares never
        // carry; only the vacuous predicate is evaluable here.
        if (meta.predicate != PredicateKind::any) {
            result.report = rejected("predicate not evaluable for a coloring secret", true);
            return result;
        }
        result.report.predicate_passed = true;
        result.report.reason = "ok";
        result.coloring = std::move(c);
        return result;
    }
    case SecretKind::number_as_graph: {
        ColoredGraph cg = decode_graph(unflatten_digits(flat, desc.n, 1));
        result.report.reconstructed = true;
        BitPayload payload;
        try {
            payload = graph_to_number(cg.graph, desc.declared_length);
        } catch (const CodecError&) {
            result.report = rejected("padding violated", true);
            return result;
        }
        result.report.predicate_passed = evaluate_predicate(predicate, cg);
        result.report.reason = result.report.predicate_passed
                                   ? "ok"
                                   : std::string("predicate failed: ") +
                                         predicate_name(meta.predicate);
        if (result.report.accepted()) {
            result.payload = std::move(payload);
        }
        return result;
    }
    }
    throw ProtocolError("unknown secret kind");
}

Share shift_attack(const Share& share, std::uint32_t constant) {
    if (share.meta.scheme != SchemeKind::kgh) {
        throw ProtocolError("shift attack applies to kgh shares only");
    }
    if (share.meta.secret.kind != SecretKind::coloring) {
        throw ProtocolError("shift attack applies to coloring shares only");
    }
    const std::uint32_t k = share.meta.secret.k;
    Share attacked = share;
    for (std::uint32_t& d : attacked.digits) {
        d = (d + constant) % k;
    }
    return attacked;
}

std::pair<Dealing, Dealing> multi_secret_share(const ColoredGraph& cg,
                                               const SchemeSpec& group_a,
                                               const SchemeSpec& group_b,
                                               RandomSource& rng) {
    if (cg.coloring.palette_size() < 2) {
        throw ProtocolError("multi-secret sharing needs a palette of size >= 2");
    }
    // Group A's randomness is derived before B's and depends only on the
    // seed, never on the coloring.
    RandomSource rng_a = rng.derive_child();
    RandomSource rng_b = rng.derive_child();
    Dealing structure =
        share_structure(cg.graph, group_a, PredicateKind::any, rng_a);
    Dealing coloring = share_coloring(cg.coloring, group_b, rng_b);
    return {std::move(structure), std::move(coloring)};
}

std::pair<ColoredGraph, bool> multi_secret_combine(const Graph& structure,
                                                   const Coloring& coloring) {
    if (coloring.size() != structure.vertex_count()) {
        throw ProtocolError("coloring length does not match structure");
    }
    ColoredGraph cg(structure, coloring);
    const bool proper = is_proper_coloring(cg);
    return {std::move(cg), proper};
}

std::vector<Dealing> leveled_share(const std::vector<DigitString>& payloads,
                                   const std::vector<std::uint32_t>& thresholds,
                                   std::uint32_t n_participants,
                                   std::uint64_t prime, RandomSource& rng) {
    if (payloads.size() != thresholds.size()) {
        throw ProtocolError("one payload per threshold level required");
    }
    if (thresholds.empty()) {
        throw ProtocolError("at least one level required");
    }
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i) {
        if (thresholds[i] >= thresholds[i + 1]) {
            throw ProtocolError("thresholds must be strictly increasing");
        }
    }
    if (thresholds.back() > n_participants) {
        throw ProtocolError("top threshold exceeds participant count");
    }
    std::vector<Dealing> levels;
    levels.reserve(payloads.size());
    for (std::size_t level = 0; level < payloads.size(); ++level) {
        const DigitString& d = payloads[level];
        SecretDescriptor desc;
        desc.kind = SecretKind::colored_graph;
        desc.n = d.n;
        desc.k = d.k;
        SchemeSpec spec = ShamirSpec{thresholds[level], n_participants, prime};
        levels.push_back(
            deal_digits(d.flatten(), desc, PredicateKind::any, spec, rng));
    }
    return levels;
}

} // namespace gss
