#include "mbr/block_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace mbr {

namespace {

constexpr char kMagic[4] = {'M', 'B', 'R', 'B'};
constexpr std::uint16_t kBlockVersion = 1;

template <typename T>
void put_le(std::ostream& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.put(static_cast<char>((value >> (8 * i)) & 0xFF));
}

template <typename T>
T get_le(std::istream& in) {
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        const int c = in.get();
        if (c == EOF) throw std::runtime_error("truncated block file");
        value |= static_cast<T>(static_cast<std::uint8_t>(c)) << (8 * i);
    }
    return value;
}

}  // namespace

std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(const std::vector<std::uint8_t>& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::vector<symbol_t> bytes_to_symbols(const std::vector<std::uint8_t>& bytes, const Field& field) {
    if (field.size() < 256)
        throw std::invalid_argument("field of size " + std::to_string(field.size()) +
                                    " cannot hold byte values; use gf256 or a prime >= 257");
    return {bytes.begin(), bytes.end()};
}

std::vector<std::uint8_t> symbols_to_bytes(const std::vector<symbol_t>& symbols,
                                           const Field& field) {
    (void)field;
    std::vector<std::uint8_t> out;
    out.reserve(symbols.size());
    for (symbol_t s : symbols) {
        if (s > 255) throw std::invalid_argument("symbol value does not fit in a byte");
        out.push_back(static_cast<std::uint8_t>(s));
    }
    return out;
}

void write_block_file(const std::filesystem::path& path, const BlockFile& block) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(kMagic, 4);
    put_le<std::uint16_t>(out, kBlockVersion);
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(block.params.n));
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(block.params.k));
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(block.params.d));
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(block.params.beta));
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(block.params.field.kind()));
    put_le<std::uint32_t>(out, block.params.field.size());
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(block.variant));
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(block.node_id));
    put_le<std::uint64_t>(out, block.stripe_groups);
    const bool wide = block.params.field.size() > 256;
    for (symbol_t s : block.symbols) {
        if (wide)
            put_le<std::uint16_t>(out, s);
        else
            put_le<std::uint8_t>(out, static_cast<std::uint8_t>(s));
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

BlockFile read_block_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (in.gcount() != 4 || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error(path.string() + ": not a block file (bad magic)");
    const auto version = get_le<std::uint16_t>(in);
    if (version != kBlockVersion)
        throw std::runtime_error(path.string() + ": unsupported block version " +
                                 std::to_string(version));
    const auto n = get_le<std::uint16_t>(in);
    const auto k = get_le<std::uint16_t>(in);
    const auto d = get_le<std::uint16_t>(in);
    const auto beta = get_le<std::uint16_t>(in);
    const auto kind = get_le<std::uint8_t>(in);
    const auto q = get_le<std::uint32_t>(in);
    const auto variant = static_cast<Variant>(get_le<std::uint8_t>(in));
    const auto node_id = get_le<std::uint16_t>(in);
    const auto stripe_groups = get_le<std::uint64_t>(in);

    const Field field = kind == static_cast<std::uint8_t>(FieldKind::Gf256) && q == 256
                            ? Field::gf256()
                            : Field::prime(q);
    BlockFile block{SystemParams::make(n, k, d, field, beta), variant, node_id, stripe_groups, {}};
    const std::uint64_t count = stripe_groups * block.params.alpha();
    block.symbols.reserve(count);
    const bool wide = q > 256;
    for (std::uint64_t i = 0; i < count; ++i)
        block.symbols.push_back(wide ? get_le<std::uint16_t>(in)
                                     : static_cast<symbol_t>(get_le<std::uint8_t>(in)));
    return block;
}

SystemParams ObjectManifest::system_params() const {
    return SystemParams::make(n, k, d, Field::parse(field), beta);
}

void ObjectManifest::save(const std::filesystem::path& path) const {
    nlohmann::json j{{"version", 1},
                     {"n", n},
                     {"k", k},
                     {"d", d},
                     {"beta", beta},
                     {"field", field},
                     {"variant", variant},
                     {"systematic", systematic},
                     {"original_length", original_length},
                     {"stripe_groups", stripe_groups},
                     {"checksum", checksum},
                     {"blocks", blocks}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << "\n";
}

ObjectManifest ObjectManifest::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json j;
    in >> j;
    ObjectManifest m;
    m.n = j.at("n").get<std::uint32_t>();
    m.k = j.at("k").get<std::uint32_t>();
    m.d = j.at("d").get<std::uint32_t>();
    m.beta = j.at("beta").get<std::uint32_t>();
    m.field = j.at("field").get<std::string>();
    m.variant = j.at("variant").get<std::string>();
    m.systematic = j.at("systematic").get<bool>();
    m.original_length = j.at("original_length").get<std::uint64_t>();
    m.stripe_groups = j.at("stripe_groups").get<std::uint64_t>();
    m.checksum = j.at("checksum").get<std::string>();
    m.blocks = j.at("blocks").get<std::vector<std::string>>();
    return m;
}

std::vector<std::vector<symbol_t>> split_into_groups(const std::vector<symbol_t>& symbols,
                                                     const SystemParams& params) {
    const std::uint32_t b = params.message_size();
    const std::uint64_t groups =
        symbols.empty() ? 1 : (symbols.size() + b - 1) / b;  // empty input: one zero group
    std::vector<std::vector<symbol_t>> out(groups, std::vector<symbol_t>(b, 0));
    for (std::size_t i = 0; i < symbols.size(); ++i) out[i / b][i % b] = symbols[i];
    return out;
}

}  // namespace mbr
