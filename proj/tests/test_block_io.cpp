#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "mbr/block_io.hpp"

using namespace mbr;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("mbr_io_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64({}) == 0xcbf29ce484222325ull);
    CHECK(fnv1a64({'a'}) == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64_hex({'a', 'b', 'c'}) == "e71fa2190541574b");
}

TEST_CASE("bytes map to symbols and back") {
    const std::vector<std::uint8_t> bytes{0, 1, 127, 128, 255};
    for (const Field f : {Field::gf256(), Field::prime(257), Field::prime(65521)}) {
        const auto syms = bytes_to_symbols(bytes, f);
        CHECK(symbols_to_bytes(syms, f) == bytes);
    }
    CHECK_THROWS_AS(bytes_to_symbols(bytes, Field::prime(251)), std::invalid_argument);
}

TEST_CASE("block file roundtrip") {
    TempDir tmp;
    for (const Field f : {Field::gf256(), Field::prime(257)}) {
        BlockFile block{SystemParams::make(6, 3, 4, f, 2), Variant::C1, 3, 5, {}};
        std::mt19937_64 rng(41);
        block.symbols.resize(block.stripe_groups * block.params.alpha());
        for (auto& s : block.symbols) s = static_cast<symbol_t>(rng() % f.size());

        const fs::path p = tmp.path / ("block_" + f.name() + ".mbr");
        write_block_file(p, block);
        const BlockFile back = read_block_file(p);
        CHECK(back.params.n == block.params.n);
        CHECK(back.params.k == block.params.k);
        CHECK(back.params.d == block.params.d);
        CHECK(back.params.beta == block.params.beta);
        CHECK(back.params.field.name() == f.name());
        CHECK(back.variant == block.variant);
        CHECK(back.node_id == block.node_id);
        CHECK(back.stripe_groups == block.stripe_groups);
        CHECK(back.symbols == block.symbols);
    }
}

TEST_CASE("corrupt block files are rejected") {
    TempDir tmp;
    const fs::path bad_magic = tmp.path / "bad_magic.mbr";
    std::ofstream(bad_magic, std::ios::binary) << "NOPE and then some bytes";
    CHECK_THROWS_AS(read_block_file(bad_magic), std::runtime_error);

    BlockFile block{SystemParams::make(4, 2, 2, Field::gf256(), 1), Variant::Baseline, 1, 2,
                    std::vector<symbol_t>(4, 9)};
    const fs::path truncated = tmp.path / "truncated.mbr";
    write_block_file(truncated, block);
    fs::resize_file(truncated, fs::file_size(truncated) - 2);
    CHECK_THROWS_AS(read_block_file(truncated), std::runtime_error);

    CHECK_THROWS_AS(read_block_file(tmp.path / "missing.mbr"), std::runtime_error);
}

TEST_CASE("manifest roundtrip") {
    TempDir tmp;
    ObjectManifest m;
    m.n = 6; m.k = 3; m.d = 4; m.beta = 2;
    m.field = "gf256";
    m.variant = "c1";
    m.systematic = true;
    m.original_length = 1048576;
    m.stripe_groups = 58255;
    m.checksum = "0123456789abcdef";
    for (int i = 1; i <= 6; ++i) m.blocks.push_back("block_" + std::to_string(i) + ".mbr");

    const fs::path p = tmp.path / "manifest.json";
    m.save(p);
    const ObjectManifest back = ObjectManifest::load(p);
    CHECK(back.n == m.n);
    CHECK(back.k == m.k);
    CHECK(back.d == m.d);
    CHECK(back.beta == m.beta);
    CHECK(back.field == m.field);
    CHECK(back.variant == m.variant);
    CHECK(back.systematic == m.systematic);
    CHECK(back.original_length == m.original_length);
    CHECK(back.stripe_groups == m.stripe_groups);
    CHECK(back.checksum == m.checksum);
    CHECK(back.blocks == m.blocks);

    const SystemParams sp = back.system_params();
    CHECK(sp.n == 6);
    CHECK(sp.field.name() == "gf256");

    std::ofstream(tmp.path / "garbage.json") << "{ not json";
    CHECK_THROWS(ObjectManifest::load(tmp.path / "garbage.json"));
}

TEST_CASE("split_into_groups pads with zeros") {
    const auto p = SystemParams::make(4, 2, 2, Field::gf256(), 1);  // B = 3
    const std::vector<symbol_t> syms{1, 2, 3, 4};
    const auto groups = split_into_groups(syms, p);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0] == std::vector<symbol_t>{1, 2, 3});
    CHECK(groups[1] == std::vector<symbol_t>{4, 0, 0});

    const auto empty = split_into_groups({}, p);
    REQUIRE(empty.size() == 1);  // an empty object still occupies one group
    CHECK(empty[0] == std::vector<symbol_t>{0, 0, 0});
}
