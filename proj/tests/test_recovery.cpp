#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mbr/combinatorics.hpp"
#include "mbr/recovery.hpp"

using namespace mbr;

namespace {

std::vector<symbol_t> random_message(const SystemParams& p, std::mt19937_64& rng) {
    std::vector<symbol_t> msg(p.message_size());
    for (auto& s : msg) s = static_cast<symbol_t>(rng() % p.field.size());
    return msg;
}

void check_metrics_invariants(const RepairMetrics& m, const SystemParams& p) {
    REQUIRE(m.read.size() == m.helpers.size());
    REQUIRE(m.download.size() == m.helpers.size());
    for (std::size_t i = 0; i < m.helpers.size(); ++i) {
        CHECK(m.download[i] == p.beta);  // every path sends beta per helper
        CHECK(m.download[i] <= m.read[i]);
        if (m.pure_transfer) CHECK(m.read[i] == p.beta);
    }
}

}  // namespace

TEST_CASE("inner-product repair worked example") {
    // GF(7), (n,k,d) = (4,2,2), M = [[1,2],[2,3]]: node 3 stores [0,4];
    // helpers {1,2} send 4 and 1 and the replacement recomputes [0,4].
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto vectors = build_encoding_vectors(p);
    const std::vector<symbol_t> msg{1, 2, 3};
    const auto contents = encode(Variant::Baseline, msg, vectors, p);
    CHECK(contents[2].symbols == std::vector<symbol_t>{0, 4});

    const std::vector<std::uint32_t> helpers{1, 2};
    const auto result = repair_compute(Variant::Baseline, 3, helpers, contents, vectors, p);
    CHECK(result.content.symbols == contents[2].symbols);
    CHECK(result.content.node_id == 3);
    CHECK(result.metrics.read == std::vector<std::uint64_t>{2, 2});  // alpha each
    CHECK(result.metrics.download == std::vector<std::uint64_t>{1, 1});
    CHECK_FALSE(result.metrics.pure_transfer);
}

TEST_CASE("inner-product repair restores content for every variant and helper set") {
    std::mt19937_64 rng(21);
    for (std::uint32_t n = 4; n <= 6; ++n)
        for (std::uint32_t d = 2; d < n; ++d)
            for (std::uint32_t k = 2; k <= d; ++k)
                for (std::uint32_t beta : {1u, 2u}) {
                    const auto p = SystemParams::make(n, k, d, Field::gf256(), beta);
                    const auto vectors = build_encoding_vectors(p);
                    const auto msg = random_message(p, rng);
                    for (Variant v : {Variant::Baseline, Variant::C1, Variant::C2}) {
                        const auto contents = encode(v, msg, vectors, p);
                        for (std::uint32_t failed = 1; failed <= n; ++failed)
                            for (const auto& helpers :
                                 combinations(nodes_except(n, failed), d)) {
                                const auto res =
                                    repair_compute(v, failed, helpers, contents, vectors, p);
                                CHECK(res.content.symbols == contents[failed - 1].symbols);
                                check_metrics_invariants(res.metrics, p);
                                CHECK(res.metrics.total_read() ==
                                      static_cast<std::uint64_t>(d) * p.alpha());
                                CHECK(res.metrics.total_download() ==
                                      static_cast<std::uint64_t>(d) * p.beta);
                            }
                    }
                }
}

TEST_CASE("C1 repair-by-transfer worked example") {
    // (4,2,2) over GF(7): after node 2 fails, every helper passes its
    // 2nd stored symbol; node 3 under C1 stores [4,1] and passes 1.
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto vectors = build_encoding_vectors(p);
    const std::vector<symbol_t> msg{1, 2, 3};
    const auto contents = encode(Variant::C1, msg, vectors, p);
    CHECK(contents[2].symbols == std::vector<symbol_t>{4, 1});

    const std::vector<std::uint32_t> helpers{1, 3};
    const auto res = repair_by_transfer_c1(2, helpers, contents, vectors, p);
    CHECK(res.content.symbols == contents[1].symbols);
    CHECK(res.metrics.pure_transfer);
    CHECK(res.metrics.read == std::vector<std::uint64_t>{1, 1});
    CHECK(res.metrics.download == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("C1 repair-by-transfer covers failed <= d, any helpers") {
    std::mt19937_64 rng(22);
    const auto p = SystemParams::make(6, 3, 4, Field::gf256(), 2);
    const auto vectors = build_encoding_vectors(p);
    const auto contents = encode(Variant::C1, random_message(p, rng), vectors, p);
    for (std::uint32_t failed = 1; failed <= p.d; ++failed)
        for (const auto& helpers : combinations(nodes_except(p.n, failed), p.d)) {
            const auto res = repair_by_transfer_c1(failed, helpers, contents, vectors, p);
            CHECK(res.content.symbols == contents[failed - 1].symbols);
            CHECK(res.metrics.pure_transfer);
            check_metrics_invariants(res.metrics, p);
        }
    const std::vector<std::uint32_t> helpers{1, 2, 3, 4};
    CHECK_THROWS_AS(repair_by_transfer_c1(5, helpers, contents, vectors, p),
                    std::invalid_argument);  // failed > d not transferable
}

TEST_CASE("C2 designated helpers and repair-by-transfer") {
    const auto p5 = SystemParams::make(5, 2, 2, Field::prime(7), 1);
    CHECK(designated_helpers_c2(1, p5) == std::vector<std::uint32_t>{4, 5});

    std::mt19937_64 rng(23);
    for (std::uint32_t n = 4; n <= 6; ++n)
        for (std::uint32_t d = 2; d < n; ++d)
            for (std::uint32_t k = 2; k <= d; ++k) {
                const auto p = SystemParams::make(n, k, d, Field::gf256(), 1);
                const auto vectors = build_encoding_vectors(p);
                const auto contents = encode(Variant::C2, random_message(p, rng), vectors, p);
                for (std::uint32_t failed = 1; failed <= n; ++failed) {
                    const auto helpers = designated_helpers_c2(failed, p);
                    CHECK(helpers.size() == d);
                    // designated set is {failed (-) d .. failed (-) 1}
                    for (std::uint32_t t = 1; t <= d; ++t)
                        CHECK(std::find(helpers.begin(), helpers.end(),
                                        cyclic_sub(failed, t, n)) != helpers.end());
                    const auto res =
                        repair_by_transfer_c2(failed, helpers, contents, vectors, p);
                    CHECK(res.content.symbols == contents[failed - 1].symbols);
                    CHECK(res.metrics.pure_transfer);
                    check_metrics_invariants(res.metrics, p);
                }
                // a non-designated set is rejected, not downgraded
                auto wrong = nodes_except(n, 1);
                wrong.resize(d);
                if (!std::is_permutation(wrong.begin(), wrong.end(),
                                         designated_helpers_c2(1, p).begin()))
                    CHECK_THROWS_AS(repair_by_transfer_c2(1, wrong, contents, vectors, p),
                                    std::invalid_argument);
            }
}

TEST_CASE("complete-graph repair-by-transfer") {
    std::mt19937_64 rng(24);
    const auto p = SystemParams::make(5, 3, 4, Field::prime(13), 2);
    const auto contents = encode_complete_graph(random_message(p, rng), p);
    for (std::uint32_t failed = 1; failed <= p.n; ++failed) {
        const auto res = repair_by_transfer_complete_graph(failed, contents, p);
        CHECK(res.content.symbols == contents[failed - 1].symbols);
        CHECK(res.metrics.pure_transfer);
        CHECK(res.metrics.helpers.size() == p.d);
        check_metrics_invariants(res.metrics, p);
    }
}

TEST_CASE("decode worked example") {
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto vectors = build_encoding_vectors(p);
    const std::vector<symbol_t> msg{1, 2, 3};
    const auto contents = encode(Variant::Baseline, msg, vectors, p);
    const std::vector<NodeContent> two{contents[1], contents[3]};
    CHECK(decode_all(Variant::Baseline, two, vectors, p) == msg);
}

TEST_CASE("any k nodes decode, every variant") {
    std::mt19937_64 rng(25);
    for (std::uint32_t n = 4; n <= 6; ++n)
        for (std::uint32_t d = 2; d < n; ++d)
            for (std::uint32_t k = 2; k <= d; ++k)
                for (std::uint32_t beta : {1u, 2u}) {
                    const auto p = SystemParams::make(n, k, d, Field::gf256(), beta);
                    const auto vectors = build_encoding_vectors(p);
                    const auto msg = random_message(p, rng);
                    for (Variant v :
                         {Variant::Baseline, Variant::C1, Variant::C2, Variant::CompleteGraph}) {
                        if (!variant_admissible(v, p)) continue;
                        const auto contents = v == Variant::CompleteGraph
                                                  ? encode_complete_graph(msg, p)
                                                  : encode(v, msg, vectors, p);
                        for (const auto& sub : combinations(all_nodes(n), k)) {
                            std::vector<NodeContent> chosen;
                            for (auto id : sub) chosen.push_back(contents[id - 1]);
                            CHECK(decode_all(v, chosen, vectors, p) == msg);
                        }
                    }
                }
}

TEST_CASE("decode input validation") {
    const auto p = SystemParams::make(4, 2, 2, Field::prime(7), 1);
    const auto vectors = build_encoding_vectors(p);
    const std::vector<symbol_t> msg{1, 2, 3};
    const auto contents = encode(Variant::Baseline, msg, vectors, p);

    CHECK_THROWS_AS(decode_all(Variant::Baseline, {contents[0]}, vectors, p),
                    std::invalid_argument);  // fewer than k nodes
    CHECK_THROWS_AS(decode_all(Variant::C1, {contents[0], contents[1]}, vectors, p),
                    std::invalid_argument);  // variant mismatch
    // more than k nodes are accepted
    CHECK(decode_all(Variant::Baseline, contents, vectors, p) == msg);
}
