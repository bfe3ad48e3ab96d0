#ifndef MBR_RECOVERY_HPP
#define MBR_RECOVERY_HPP

#include <span>
#include <string>
#include <vector>

#include "mbr/code_variants.hpp"

namespace mbr {

/// Exact per-helper accounting for one repair event, in field symbols
/// (summed over the beta stripes). pure_transfer is true iff every
/// helper's passed symbols are verbatim stored symbols.
struct RepairMetrics {
    Variant variant = Variant::Baseline;
    std::uint32_t failed = 0;
    std::vector<std::uint32_t> helpers;
    std::vector<std::uint64_t> read;      // per helper
    std::vector<std::uint64_t> download;  // per helper
    bool pure_transfer = false;

    std::uint64_t total_read() const;
    std::uint64_t total_download() const;

    static std::string csv_header();
    std::string csv_row() const;
};

struct RepairResult {
    NodeContent content;
    RepairMetrics metrics;
};

/// Inner-product repair: works for any d helpers under Baseline, C1, C2.
/// Each helper reads all alpha symbols and sends the beta inner products
/// psi_l^T M psi_failed; the replacement solves for M psi_failed and
/// re-applies its own storage transform.
RepairResult repair_compute(Variant v, std::uint32_t failed, std::span<const std::uint32_t> helpers,
                            const std::vector<NodeContent>& contents,
                            const EncodingVectors& vectors, const SystemParams& params);

/// C1 repair-by-transfer of node failed <= d from any d helpers: each
/// helper passes its failed-th stored symbol per stripe.
RepairResult repair_by_transfer_c1(std::uint32_t failed, std::span<const std::uint32_t> helpers,
                                   const std::vector<NodeContent>& contents,
                                   const EncodingVectors& vectors, const SystemParams& params);

/// The one helper set from which C2 repairs by transfer:
/// {failed (-) d, ..., failed (-) 1}.
std::vector<std::uint32_t> designated_helpers_c2(std::uint32_t failed, const SystemParams& params);

/// C2 repair-by-transfer from exactly the designated helper set. A
/// different helper set is rejected, not silently downgraded; callers may
/// explicitly chain to repair_compute.
RepairResult repair_by_transfer_c2(std::uint32_t failed, std::span<const std::uint32_t> helpers,
                                   const std::vector<NodeContent>& contents,
                                   const EncodingVectors& vectors, const SystemParams& params);

/// Complete-graph repair: every other node passes the symbol of its edge
/// to the failed node.
RepairResult repair_by_transfer_complete_graph(std::uint32_t failed,
                                               const std::vector<NodeContent>& contents,
                                               const SystemParams& params);

/// Recovers the B message symbols from any k node contents (more are
/// accepted; the first k distinct nodes are used).
std::vector<symbol_t> decode_all(Variant v, const std::vector<NodeContent>& nodes,
                                 const EncodingVectors& vectors, const SystemParams& params);

}  // namespace mbr

#endif
