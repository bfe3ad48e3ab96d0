#ifndef MBR_RBT_SEARCH_HPP
#define MBR_RBT_SEARCH_HPP

#include <optional>
#include <span>
#include <vector>

#include "mbr/recovery.hpp"

namespace mbr {

/// Thrown when an exhaustive search would exceed its rank-test budget.
/// Reported to the caller, never silently truncated.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank-test budget shared across one report; default overridable via the
/// MBR_ENUM_BUDGET environment variable.
std::uint64_t default_enumeration_budget();

/// Stored symbols of every node as linear forms over the stripe message
/// space: forms[i] is an alpha0 x B0 matrix whose row t is the functional
/// computed by node i+1's t-th stored symbol. Built at stripe granularity
/// (beta = 1); multi-stripe schedules reduce to this by linearity.
struct ContentForms {
    SystemParams stripe_params;
    std::vector<Matrix> forms;  // indexed by node_id - 1

    std::uint32_t per_node() const { return static_cast<std::uint32_t>(forms.front().rows()); }
};

ContentForms content_forms(Variant v, const SystemParams& params);

/// For a fixed (failed, helper set): the stored-symbol indices (0-based,
/// per stripe) each helper passes.
struct TransferSchedule {
    std::vector<std::uint32_t> helpers;
    std::vector<std::vector<std::uint32_t>> indices;  // per helper, beta distinct indices
};

struct SearchBudget {
    std::uint64_t limit = 1'000'000;
    std::uint64_t used = 0;

    void charge();
};

/// Enumerates every per-helper index choice and returns the first schedule
/// whose passed forms span the failed node's stored forms, or nullopt
/// after exhausting the enumeration. Sound and complete over its domain.
std::optional<TransferSchedule> schedule_feasible(const ContentForms& forms, std::uint32_t failed,
                                                  std::span<const std::uint32_t> helpers,
                                                  SearchBudget& budget);

struct PairFeasibility {
    std::uint32_t failed;
    std::vector<std::uint32_t> helpers;
    bool feasible;
    std::optional<TransferSchedule> witness;
};

/// Aggregated feasibility over every (failed node, d-subset of helpers)
/// pair of one code instance.
struct FeasibilityReport {
    Variant variant;
    std::vector<PairFeasibility> pairs;
    bool overall_feasible;
    std::uint64_t rank_tests;
};

FeasibilityReport verify_theorem_witness(Variant v, const SystemParams& params,
                                         std::uint64_t budget_limit);

/// One repair event a node helped with, and the index it passed.
struct CensusEvent {
    std::uint32_t failed;
    std::vector<std::uint32_t> helpers;
    std::uint32_t index;  // 0-based stored-symbol index at the censused node
};

/// Watches one node act as helper across up to d+1 feasible repair
/// events (found by exhaustive search, deterministic order) and counts
/// how often each of its stored-symbol indices gets passed. With beta = 1
/// a node has only alpha indices, so more than alpha events force a
/// repeat by counting.
struct SharedSymbolCensus {
    std::uint32_t node;
    std::vector<CensusEvent> events;
    std::vector<std::uint32_t> index_counts;  // per stored-symbol index
    bool repeated;
};

SharedSymbolCensus shared_symbol_census(Variant v, std::uint32_t node, const SystemParams& params,
                                        std::uint64_t budget_limit);

}  // namespace mbr

#endif
