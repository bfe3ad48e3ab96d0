#ifndef MBR_HARNESS_HPP
#define MBR_HARNESS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mbr/rbt_search.hpp"

namespace mbr {

enum class HelperPolicy : std::uint8_t {
    Designated,           // C2's designated set; otherwise lowest node ids
    RandomAdmissible,     // uniformly random d-subset, driven by the seed
    AdversarialWorstRead  // the d-subset maximizing read under the best path
};

std::string policy_name(HelperPolicy p);
HelperPolicy policy_from_name(const std::string& name);

struct WorkloadEvent {
    enum class Type : std::uint8_t { Fail, DegradedRead, FullRead };
    Type type;
    std::uint32_t node = 0;  // unused for FullRead
};

/// Deterministic event sequence. Text form: a header (`seed N`,
/// `policy designated|random|adversarial`), then one event per line
/// (`fail 3`, `read 5`, `full`). `#` starts a comment.
struct Workload {
    std::uint64_t seed = 0;
    HelperPolicy policy = HelperPolicy::Designated;
    std::vector<WorkloadEvent> events;

    static Workload parse(std::istream& in);
    void write(std::ostream& out) const;
};

/// Aggregate traffic of one workload run, in field symbols. Ratios are
/// against the per-recovery lower bound of d*beta symbols; full reads are
/// metered but excluded from the recovery ratios.
struct TrafficSummary {
    Variant variant;
    std::size_t events = 0;
    std::size_t recoveries = 0;
    std::uint64_t read = 0;
    std::uint64_t download = 0;
    double read_ratio = 0.0;
    double download_ratio = 0.0;
    double pure_transfer_frac = 0.0;
    std::vector<RepairMetrics> per_recovery;

    static std::string csv_header();
    std::string csv_row() const;
};

/// Replays the workload against one encoded instance. Every repair is
/// verified to restore the lost content exactly. Deterministic given
/// (seed, workload, params, message).
TrafficSummary run_workload(Variant v, const SystemParams& params,
                            std::span<const symbol_t> message, const Workload& workload);

/// Runs the identical event sequence against every admissible variant;
/// rows ordered baseline, c1, c2, complete.
std::vector<TrafficSummary> compare_variants(const SystemParams& params,
                                             std::span<const symbol_t> message,
                                             const Workload& workload);

}  // namespace mbr

#endif
