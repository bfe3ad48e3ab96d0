#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mbr/code_variants.hpp"
#include "mbr/combinatorics.hpp"

using namespace mbr;

namespace {

std::vector<symbol_t> random_message(const SystemParams& p, std::mt19937_64& rng) {
    std::vector<symbol_t> msg(p.message_size());
    for (auto& s : msg) s = static_cast<symbol_t>(rng() % p.field.size());
    return msg;
}

}  // namespace

TEST_CASE("cyclic index arithmetic") {
    CHECK(cyclic_add(4, 3, 5) == 2);
    CHECK(cyclic_sub(3, 2, 5) == 1);
    for (std::uint32_t n : {2u, 5u, 9u})
        for (std::uint32_t x = 1; x <= n; ++x) {
            CHECK(cyclic_add(x, n, n) == x);  // full cycle
            CHECK(cyclic_sub(cyclic_add(x, 3, n), 3, n) == x);
        }
}

TEST_CASE("node transforms") {
    const auto p = SystemParams::make(5, 2, 2, Field::prime(7), 1);
    const auto vectors = build_encoding_vectors(p);

    CHECK(node_transform(Variant::Baseline, 3, vectors, p) == Matrix::identity(p.field, 2));

    const Matrix psi0 = node_transform(Variant::C1, 4, vectors, p);
    for (std::uint32_t col = 0; col < 2; ++col)
        for (std::uint32_t r = 0; r < 2; ++r) CHECK(psi0(r, col) == vectors.psi(col, r));

    // C2, node i: columns psi_{i(+)1}, psi_{i(+)2}
    const Matrix phi = node_transform(Variant::C2, 4, vectors, p);
    for (std::uint32_t r = 0; r < 2; ++r) {
        CHECK(phi(r, 0) == vectors.psi(4, r));  // 4 (+) 1 = 5
        CHECK(phi(r, 1) == vectors.psi(0, r));  // 4 (+) 2 = 1
    }

    CHECK_THROWS_AS(node_transform(Variant::CompleteGraph, 1, vectors, p), std::invalid_argument);

    // invertibility for all nodes and variants
    for (Variant v : {Variant::Baseline, Variant::C1, Variant::C2})
        for (std::uint32_t i = 1; i <= p.n; ++i)
            CHECK(mat_rank(node_transform(v, i, vectors, p)) == p.d);
}

TEST_CASE("encode worked example") {
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto vectors = build_encoding_vectors(p);
    const std::vector<symbol_t> msg{1, 2, 3};  // M = [[1,2],[2,3]]

    const auto base = encode(Variant::Baseline, msg, vectors, p);
    CHECK(base[0].symbols == std::vector<symbol_t>{3, 5});
    CHECK(base[1].symbols == std::vector<symbol_t>{5, 1});

    const auto c1 = encode(Variant::C1, msg, vectors, p);
    CHECK(c1[2].symbols == std::vector<symbol_t>{4, 1});  // psi_3^T M = [0,4], times Psi0

    const std::vector<symbol_t> zeros(p.message_size(), 0);
    for (const auto& nc : encode(Variant::Baseline, zeros, vectors, p))
        CHECK(std::all_of(nc.symbols.begin(), nc.symbols.end(),
                          [](symbol_t s) { return s == 0; }));
}

TEST_CASE("variant content equals baseline content times phi") {
    std::mt19937_64 rng(3);
    for (std::uint32_t n = 3; n <= 6; ++n)
        for (std::uint32_t d = 2; d < n; ++d)
            for (std::uint32_t k = 2; k <= d; ++k)
                for (std::uint32_t beta : {1u, 2u}) {
                    const auto p = SystemParams::make(n, k, d, Field::gf256(), beta);
                    const auto vectors = build_encoding_vectors(p);
                    const auto msg = random_message(p, rng);
                    const auto base = encode(Variant::Baseline, msg, vectors, p);
                    for (Variant v : {Variant::C1, Variant::C2}) {
                        const auto coded = encode(v, msg, vectors, p);
                        for (std::uint32_t i = 1; i <= n; ++i) {
                            const Matrix phi = node_transform(v, i, vectors, p);
                            for (std::uint32_t s = 0; s < beta; ++s) {
                                Matrix row(p.field, 1, d);
                                row.set_row(0, base[i - 1].stripe(s, d));
                                const Matrix expect = row * phi;
                                const auto got = coded[i - 1].stripe(s, d);
                                for (std::uint32_t c = 0; c < d; ++c)
                                    CHECK(expect(0, c) == got[c]);
                            }
                        }
                    }
                }
}

TEST_CASE("shared-symbol symmetry under C1") {
    // the j-th stored symbol of node i equals the i-th stored symbol of
    // node j (both are psi_i^T M psi_j)
    std::mt19937_64 rng(4);
    const auto p = SystemParams::make(6, 3, 4, Field::gf256(), 1);
    const auto vectors = build_encoding_vectors(p);
    const auto coded = encode(Variant::C1, random_message(p, rng), vectors, p);
    for (std::uint32_t i = 1; i <= p.d; ++i)
        for (std::uint32_t j = 1; j <= p.d; ++j)
            CHECK(coded[i - 1].symbols[j - 1] == coded[j - 1].symbols[i - 1]);
}

TEST_CASE("complete-graph code") {
    std::mt19937_64 rng(5);
    const auto p = SystemParams::make(5, 3, 4, Field::prime(13), 1);
    CHECK(p.message_size() == 9);
    CHECK(edge_count(5) == 10);
    const auto msg = random_message(p, rng);
    const auto coded = encode_complete_graph(msg, p);
    for (const auto& nc : coded) CHECK(nc.symbols.size() == 4);

    // every k-subset jointly holds exactly B distinct edge symbols
    for (const auto& sub : combinations(all_nodes(5), 3u)) {
        std::set<std::uint32_t> edges;
        for (auto i : sub)
            for (std::uint32_t j = 1; j <= 5; ++j)
                if (j != i) edges.insert(edge_index(i, j, 5));
        CHECK(edges.size() == p.message_size());
    }

    // shared edge symbol appears at both endpoints
    for (std::uint32_t i = 1; i <= 5; ++i)
        for (std::uint32_t j = i + 1; j <= 5; ++j) {
            const std::uint32_t pos_i = j < i ? j - 1 : j - 2;
            const std::uint32_t pos_j = i < j ? i - 1 : i - 2;
            CHECK(coded[i - 1].symbols[pos_i] == coded[j - 1].symbols[pos_j]);
        }

    CHECK_THROWS_AS(encode_complete_graph(msg, SystemParams::make(5, 3, 3, Field::prime(13), 1)),
                    std::invalid_argument);  // d != n-1
    CHECK_THROWS_AS(encode_complete_graph(msg, SystemParams::make(5, 3, 4, Field::prime(7), 1)),
                    std::invalid_argument);  // too few evaluation points
}

TEST_CASE("complete-graph replication degenerate case") {
    const auto p = SystemParams::make(2, 1, 1, Field::prime(3), 1);
    CHECK(p.message_size() == 1);
    const std::vector<symbol_t> msg{2};
    const auto coded = encode_complete_graph(msg, p);
    CHECK(coded[0].symbols == coded[1].symbols);
    CHECK(coded[0].symbols.size() == 1);
}

TEST_CASE("systematic precoding places the message verbatim") {
    std::mt19937_64 rng(6);
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto vectors = build_encoding_vectors(p);

    const auto positions = systematic_positions(p);
    REQUIRE(positions.size() == 3);
    CHECK(positions[0].node_id == 1);
    CHECK(positions[0].index == 0);
    CHECK(positions[1].node_id == 1);
    CHECK(positions[1].index == 1);
    CHECK(positions[2].node_id == 2);
    CHECK(positions[2].index == 1);

    for (int trial = 0; trial < 50; ++trial) {
        const auto msg = random_message(p, rng);
        const auto matrices = precode_systematic(msg, vectors, p);
        REQUIRE(matrices.size() == 1);
        const auto stripe = encode_stripe(Variant::C1, matrices[0], vectors, p);
        for (std::size_t r = 0; r < positions.size(); ++r)
            CHECK(stripe[positions[r].node_id - 1][positions[r].index] == msg[r]);
    }

    const std::vector<symbol_t> zeros(p.message_size(), 0);
    CHECK(precode_systematic(zeros, vectors, p)[0].is_zero());
}

TEST_CASE("precode/postcode invert each other") {
    std::mt19937_64 rng(8);
    const auto p = SystemParams::make(6, 3, 4, Field::gf256(), 2);
    const auto vectors = build_encoding_vectors(p);
    const auto msg = random_message(p, rng);
    const auto matrices = precode_systematic(msg, vectors, p);
    std::vector<symbol_t> coeffs;
    for (const auto& m : matrices) {
        const auto flat = flatten_message_matrix(m, p);
        coeffs.insert(coeffs.end(), flat.begin(), flat.end());
    }
    CHECK(postcode_systematic(coeffs, vectors, p) == msg);
}
