#ifndef MBR_BLOCK_IO_HPP
#define MBR_BLOCK_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mbr/code_variants.hpp"

namespace mbr {

/// FNV-1a 64-bit digest of a byte buffer; used as the plaintext checksum.
std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes);
std::string fnv1a64_hex(const std::vector<std::uint8_t>& bytes);

/// Bytes map one-to-one onto field symbols; requires q >= 256
/// (gf256 or a prime >= 257).
std::vector<symbol_t> bytes_to_symbols(const std::vector<std::uint8_t>& bytes, const Field& field);
std::vector<std::uint8_t> symbols_to_bytes(const std::vector<symbol_t>& symbols, const Field& field);

/// One node's share of an encoded object: its per-stripe-group contents
/// concatenated. Binary layout (little-endian):
///   magic "MBRB", u16 version, u16 n, u16 k, u16 d, u16 beta,
///   u8 field kind, u32 q, u8 variant, u16 node id, u64 stripe groups,
///   then stripe_groups * alpha symbols (1 byte each if q <= 256, else 2).
struct BlockFile {
    SystemParams params;
    Variant variant;
    std::uint32_t node_id;
    std::uint64_t stripe_groups;
    std::vector<symbol_t> symbols;
};

void write_block_file(const std::filesystem::path& path, const BlockFile& block);
BlockFile read_block_file(const std::filesystem::path& path);

/// JSON manifest describing one encoded object.
struct ObjectManifest {
    std::uint32_t n, k, d, beta;
    std::string field;  // "gf256" or "p:<prime>"
    std::string variant;
    bool systematic = false;
    std::uint64_t original_length = 0;
    std::uint64_t stripe_groups = 0;
    std::string checksum;  // fnv1a64 hex of the plaintext
    std::vector<std::string> blocks;  // file names relative to the manifest

    SystemParams system_params() const;

    void save(const std::filesystem::path& path) const;
    static ObjectManifest load(const std::filesystem::path& path);
};

/// Splits an object into stripe groups of B symbols (zero padded) and
/// returns per-group messages.
std::vector<std::vector<symbol_t>> split_into_groups(const std::vector<symbol_t>& symbols,
                                                     const SystemParams& params);

}  // namespace mbr

#endif
