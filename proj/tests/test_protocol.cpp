#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gss/protocol.hpp"
#include "helpers.hpp"

using namespace gss;
using namespace gss::testing;

namespace {

std::vector<Share> subset(const std::vector<Share>& shares, std::uint32_t mask) {
    std::vector<Share> out;
    for (std::size_t i = 0; i < shares.size(); ++i) {
        if (mask & (1u << i)) {
            out.push_back(shares[i]);
        }
    }
    return out;
}

} // namespace

TEST_CASE("kgh dealing of the worked example reconstructs its digit string") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{51});
    const Dealing dealing = share_colored_graph(example1(), KghSpec{3},
                                                PredicateKind::proper_coloring, rng);
    REQUIRE(dealing.shares.size() == 3);
    const RecoveredSecret result = reconstruct_and_verify(dealing.shares);
    CHECK(result.report.accepted());
    REQUIRE(result.colored_graph.has_value());
    CHECK(*result.colored_graph == example1());
    CHECK(encode_graph(*result.colored_graph).to_string() == "0111010021");
}

TEST_CASE("shamir t=1 n=1 single share is the secret block") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{52});
    const ColoredGraph cg = ColoredGraph::structure_only(edgeless(2));
    const Dealing dealing =
        share_colored_graph(cg, ShamirSpec{1, 1}, PredicateKind::any, rng);
    REQUIRE(dealing.shares.size() == 1);
    CHECK(dealing.shares[0].field_blocks == std::vector<std::uint64_t>{0});
    const RecoveredSecret result = reconstruct_and_verify(dealing.shares);
    CHECK(result.report.accepted());
    CHECK(*result.colored_graph == cg);
}

TEST_CASE("all 2-subsets of a shamir t=2 n=3 dealing agree") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{53});
    const Dealing dealing = share_colored_graph(example1(), ShamirSpec{2, 3},
                                                PredicateKind::connected, rng);
    for (std::uint32_t mask : {0b011u, 0b101u, 0b110u, 0b111u}) {
        const RecoveredSecret result = reconstruct_and_verify(subset(dealing.shares, mask));
        CHECK(result.report.accepted());
        CHECK(*result.colored_graph == example1());
    }
    CHECK_THROWS_AS(reconstruct_and_verify(subset(dealing.shares, 0b001u)), SchemeError);
}

TEST_CASE("end-to-end identity for random colored graphs under both schemes") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{54});
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.uniform_below(16));
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.uniform_below(8));
        const ColoredGraph cg = random_colored_graph(n, k, rng);

        const Dealing kgh =
            share_colored_graph(cg, KghSpec{3}, PredicateKind::any, rng);
        CHECK(*reconstruct_and_verify(kgh.shares).colored_graph == cg);

        const Dealing shamir =
            share_colored_graph(cg, ShamirSpec{2, 4}, PredicateKind::any, rng);
        CHECK(*reconstruct_and_verify(subset(shamir.shares, 0b1010u)).colored_graph == cg);
    }
}

TEST_CASE("predicate failure is a verdict, not an exception") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{55});
    const ColoredGraph disconnected = ColoredGraph::structure_only(edgeless(3));
    const Dealing dealing =
        share_colored_graph(disconnected, KghSpec{2}, PredicateKind::connected, rng);
    const RecoveredSecret result = reconstruct_and_verify(dealing.shares);
    CHECK(result.report.reconstructed);
    CHECK_FALSE(result.report.predicate_passed);
    CHECK_FALSE(result.report.accepted());
    CHECK_FALSE(result.colored_graph.has_value());
    CHECK(result.report.reason == "predicate failed: connected");
}

TEST_CASE("out-of-space shamir reconstruction is rejected") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{56});
    // space 2^1 * 3^2 = 18 needs 5 bits; flood the block with a value >= 18
    const ColoredGraph cg(edgeless(2), Coloring(3, {0, 0}));
    Dealing dealing = share_colored_graph(cg, ShamirSpec{1, 2}, PredicateKind::any, rng);
    dealing.shares[0].field_blocks[0] = 31;
    dealing.shares[1].field_blocks[0] = 31;
    const RecoveredSecret result = reconstruct_and_verify({dealing.shares[0]});
    CHECK_FALSE(result.report.reconstructed);
    CHECK(result.report.reason == "out of secret space");
}

TEST_CASE("share_coloring carries colors only") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{57});
    const Coloring colors(3, {0, 0, 2, 1});
    const Dealing dealing = share_coloring(colors, KghSpec{2}, rng);
    for (const Share& s : dealing.shares) {
        CHECK(s.digits.size() == 4); // one digit per vertex, no structure bits
        CHECK(s.meta.secret.kind == SecretKind::coloring);
    }
    const RecoveredSecret result = reconstruct_and_verify(dealing.shares);
    CHECK(result.report.accepted());
    CHECK(*result.coloring == colors);

    CHECK_THROWS_AS(share_coloring(Coloring(1, {0, 0}), KghSpec{2}, rng),
                    ProtocolError);

    // single vertex coloring round-trips
    const Dealing tiny = share_coloring(Coloring(4, {3}), KghSpec{3}, rng);
    CHECK(*reconstruct_and_verify(tiny.shares).coloring == Coloring(4, {3}));
}

TEST_CASE("shift attack rotates the assignment but preserves the partition") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{58});
    const Coloring colors(3, {0, 0, 2, 1});
    const Dealing dealing = share_coloring(colors, KghSpec{3}, rng);

    SUBCASE("c = 0 leaves the share untouched") {
        CHECK(shift_attack(dealing.shares[0], 0) == dealing.shares[0]);
    }
    SUBCASE("c = k is a full rotation") {
        CHECK(shift_attack(dealing.shares[0], 3) == dealing.shares[0]);
    }
    SUBCASE("c = 1 shifts the reconstructed coloring") {
        auto shares = dealing.shares;
        shares[1] = shift_attack(shares[1], 1);
        const RecoveredSecret result = reconstruct_and_verify(shares);
        CHECK(*result.coloring == Coloring(3, {1, 1, 0, 2}));
        CHECK(partition_of(*result.coloring) == partition_of(colors));
        CHECK(is_proper_coloring(ColoredGraph(example1().graph, *result.coloring)));
    }
    SUBCASE("non-coloring and non-kgh shares are rejected") {
        RandomSource rng2 = RandomSource::from_seed(std::uint64_t{59});
        const Dealing graph_dealing =
            share_colored_graph(example1(), KghSpec{2}, PredicateKind::any, rng2);
        CHECK_THROWS_AS(shift_attack(graph_dealing.shares[0], 1), ProtocolError);
        const Dealing shamir_dealing =
            share_coloring(Coloring(3, {0, 1, 2}), ShamirSpec{1, 2}, rng2);
        CHECK_THROWS_AS(shift_attack(shamir_dealing.shares[0], 1), ProtocolError);
    }
}

TEST_CASE("shift attack invariance for random proper colorings") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{60});
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.uniform_below(7));
        const ColoredGraph cg = random_properly_colored_graph(n, rng);
        const std::uint32_t k = cg.coloring.palette_size();
        const std::uint32_t c = static_cast<std::uint32_t>(rng.uniform_below(2 * k));

        const Dealing dealing = share_coloring(cg.coloring, KghSpec{2}, rng);
        auto shares = dealing.shares;
        shares[0] = shift_attack(shares[0], c);
        const RecoveredSecret result = reconstruct_and_verify(shares);
        REQUIRE(result.coloring.has_value());
        CHECK(partition_of(*result.coloring) == partition_of(cg.coloring));
        CHECK(is_proper_coloring(ColoredGraph(cg.graph, *result.coloring)));
        CHECK((*result.coloring == cg.coloring) == (c % k == 0));
    }
}

TEST_CASE("multi-secret split separates structure from coloring") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{61});
    const auto [structure, coloring] =
        multi_secret_share(example1(), KghSpec{2}, KghSpec{2}, rng);

    for (const Share& s : structure.shares) {
        CHECK(s.digits.size() == 6); // triangle positions only, no color digits
        CHECK(s.meta.secret.kind == SecretKind::structure);
    }
    const RecoveredSecret a = reconstruct_and_verify(structure.shares);
    CHECK(*a.colored_graph == ColoredGraph::structure_only(example1().graph));
    const RecoveredSecret b = reconstruct_and_verify(coloring.shares);
    CHECK(*b.coloring == example1().coloring);

    const auto [combined, proper] =
        multi_secret_combine(a.colored_graph->graph, *b.coloring);
    CHECK(combined == example1());
    CHECK(proper);

    CHECK_THROWS_AS(multi_secret_combine(triangle(), example1().coloring),
                    ProtocolError);
    CHECK_FALSE(multi_secret_combine(triangle(), Coloring(2, {0, 0, 0})).second);
    CHECK(multi_secret_combine(edgeless(3), Coloring(2, {1, 1, 1})).second);
}

TEST_CASE("group A shares are independent of the coloring") {
    auto structure_shares = [](const Coloring& colors) {
        RandomSource rng = RandomSource::from_seed(std::uint64_t{62});
        ColoredGraph cg(Graph(example1().graph), colors);
        return multi_secret_share(cg, KghSpec{2}, KghSpec{2}, rng).first.shares;
    };
    CHECK(structure_shares(Coloring(3, {0, 0, 2, 1})) ==
          structure_shares(Coloring(3, {2, 2, 2, 2})));
}

TEST_CASE("leveled sharing recovers exactly the levels a subset can open") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{63});
    std::vector<DigitString> payloads;
    for (std::uint32_t level = 0; level < 4; ++level) {
        payloads.push_back(encode_graph(random_colored_graph(3 + level, 2, rng)));
    }
    const std::vector<std::uint32_t> thresholds{1, 2, 3, 4};
    const auto levels = leveled_share(payloads, thresholds, 4, kProductionPrime, rng);
    REQUIRE(levels.size() == 4);

    for (std::uint32_t mask = 1; mask < 16; ++mask) {
        const std::uint32_t size = static_cast<std::uint32_t>(__builtin_popcount(mask));
        for (std::uint32_t level = 0; level < 4; ++level) {
            const auto chosen = subset(levels[level].shares, mask);
            if (thresholds[level] <= size) {
                const RecoveredSecret result = reconstruct_and_verify(chosen);
                CHECK(result.report.accepted());
                CHECK(encode_graph(*result.colored_graph) == payloads[level]);
            } else {
                CHECK_THROWS_AS(reconstruct_and_verify(chosen), SchemeError);
            }
        }
    }

    CHECK_THROWS_AS(leveled_share(payloads, {1, 2, 2, 4}, 4, kProductionPrime, rng),
                    ProtocolError);
    CHECK_THROWS_AS(leveled_share(payloads, {1, 2, 3, 5}, 4, kProductionPrime, rng),
                    ProtocolError);
    CHECK_THROWS_AS(leveled_share(payloads, {1, 2}, 4, kProductionPrime, rng),
                    ProtocolError);
}

TEST_CASE("number-as-graph dealings roundtrip and catch padding tampering") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{64});
    const BitPayload payload{{0, 1, 1, 1}};
    const Dealing dealing =
        share_number_as_graph(payload, KghSpec{3}, PredicateKind::any, rng);
    const RecoveredSecret result = reconstruct_and_verify(dealing.shares);
    CHECK(result.report.accepted());
    CHECK(*result.payload == payload);

    // tamper a padding-region digit: position 5 is past the declared length
    auto shares = dealing.shares;
    shares[0].digits[5] = (shares[0].digits[5] + 1) % 2;
    const RecoveredSecret tampered = reconstruct_and_verify(shares);
    CHECK_FALSE(tampered.report.accepted());
    CHECK(tampered.report.reason == "padding violated");

    // empty payload is lawful
    const Dealing empty =
        share_number_as_graph(BitPayload{{}}, KghSpec{2}, PredicateKind::any, rng);
    CHECK(reconstruct_and_verify(empty.shares).payload->bits.empty());
}

TEST_CASE("tampered kgh share detection rate matches the census prediction") {
    RandomSource rng = RandomSource::from_seed(std::uint64_t{65});
    const Graph g = example1().graph; // connected, n = 4
    const Dealing dealing =
        share_structure(g, KghSpec{3}, PredicateKind::connected, rng);

    int rejected = 0;
    const int trials = 2000;
    for (int trial = 0; trial < trials; ++trial) {
        auto shares = dealing.shares;
        // uniform tamper: replace one share with a fresh uniform digit vector
        for (auto& d : shares[1].digits) {
            d = rng.uniform_digit(2);
        }
        if (!reconstruct_and_verify(shares).report.accepted()) {
            ++rejected;
        }
    }
    // prediction: 1 - 38/64 = 0.40625
    const double rate = static_cast<double>(rejected) / trials;
    CHECK(rate > 0.40625 - 0.05);
    CHECK(rate < 0.40625 + 0.05);
}
