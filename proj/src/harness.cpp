#include "mbr/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "mbr/combinatorics.hpp"

namespace mbr {

std::string policy_name(HelperPolicy p) {
    switch (p) {
        case HelperPolicy::Designated: return "designated";
        case HelperPolicy::RandomAdmissible: return "random";
        case HelperPolicy::AdversarialWorstRead: return "adversarial";
    }
    throw std::invalid_argument("unknown policy");
}

HelperPolicy policy_from_name(const std::string& name) {
    if (name == "designated") return HelperPolicy::Designated;
    if (name == "random") return HelperPolicy::RandomAdmissible;
    if (name == "adversarial") return HelperPolicy::AdversarialWorstRead;
    throw std::invalid_argument("unknown policy name: " + name);
}

Workload Workload::parse(std::istream& in) {
    Workload w;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto fail_at = [&](const std::string& msg) {
            throw std::invalid_argument("workload line " + std::to_string(lineno) + ": " + msg);
        };
        if (word == "seed") {
            if (!(ls >> w.seed)) fail_at("expected a seed value");
        } else if (word == "policy") {
            std::string name;
            if (!(ls >> name)) fail_at("expected a policy name");
            w.policy = policy_from_name(name);
        } else if (word == "fail" || word == "read") {
            std::uint32_t node = 0;
            if (!(ls >> node)) fail_at("expected a node id");
            w.events.push_back({word == "fail" ? WorkloadEvent::Type::Fail
                                               : WorkloadEvent::Type::DegradedRead,
                                node});
        } else if (word == "full") {
            w.events.push_back({WorkloadEvent::Type::FullRead, 0});
        } else {
            fail_at("unknown directive '" + word + "'");
        }
    }
    return w;
}

void Workload::write(std::ostream& out) const {
    out << "seed " << seed << "\n";
    out << "policy " << policy_name(policy) << "\n";
    for (const auto& e : events) {
        switch (e.type) {
            case WorkloadEvent::Type::Fail: out << "fail " << e.node << "\n"; break;
            case WorkloadEvent::Type::DegradedRead: out << "read " << e.node << "\n"; break;
            case WorkloadEvent::Type::FullRead: out << "full\n"; break;
        }
    }
}

std::string TrafficSummary::csv_header() {
    return "variant,events,read,download,read_ratio,download_ratio,pure_transfer_frac";
}

std::string TrafficSummary::csv_row() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%zu,%llu,%llu,%.6f,%.6f,%.6f",
                  variant_name(variant).c_str(), events,
                  static_cast<unsigned long long>(read),
                  static_cast<unsigned long long>(download), read_ratio, download_ratio,
                  pure_transfer_frac);
    return buf;
}

namespace {

// transfer paths guaranteed by construction; the simulator does not run
// the search oracle
bool transfer_admissible(Variant v, std::uint32_t failed,
                         std::span<const std::uint32_t> helpers, const SystemParams& params) {
    switch (v) {
        case Variant::Baseline: return false;
        case Variant::C1: return failed <= params.d;
        case Variant::C2: {
            const auto designated = designated_helpers_c2(failed, params);
            return std::is_permutation(helpers.begin(), helpers.end(), designated.begin());
        }
        case Variant::CompleteGraph: return true;
    }
    return false;
}

std::uint64_t path_read(Variant v, std::uint32_t failed, std::span<const std::uint32_t> helpers,
                        const SystemParams& params) {
    return transfer_admissible(v, failed, helpers, params)
               ? std::uint64_t{params.d} * params.beta
               : std::uint64_t{params.d} * params.alpha();
}

// portable deterministic sampling; std::shuffle / distributions are
// implementation-defined, raw engine output is not
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t j = items.size(); j > 1; --j)
        std::swap(items[j - 1], items[rng() % j]);
}

std::vector<std::uint32_t> choose_helpers(Variant v, std::uint32_t failed,
                                          const SystemParams& params, HelperPolicy policy,
                                          std::mt19937_64& rng) {
    if (v == Variant::CompleteGraph) return nodes_except(params.n, failed);
    switch (policy) {
        case HelperPolicy::Designated: {
            if (v == Variant::C2) return designated_helpers_c2(failed, params);
            auto others = nodes_except(params.n, failed);
            others.resize(params.d);
            return others;
        }
        case HelperPolicy::RandomAdmissible: {
            auto others = nodes_except(params.n, failed);
            deterministic_shuffle(others, rng);
            others.resize(params.d);
            std::sort(others.begin(), others.end());
            return others;
        }
        case HelperPolicy::AdversarialWorstRead: {
            std::vector<std::uint32_t> worst;
            std::uint64_t worst_read = 0;
            for (const auto& c : combinations(nodes_except(params.n, failed), params.d)) {
                const std::uint64_t r = path_read(v, failed, c, params);
                if (r > worst_read) {
                    worst_read = r;
                    worst = c;
                }
            }
            return worst;
        }
    }
    throw std::invalid_argument("unknown policy");
}

RepairResult run_repair(Variant v, std::uint32_t failed, std::span<const std::uint32_t> helpers,
                        const std::vector<NodeContent>& contents, const EncodingVectors& vectors,
                        const SystemParams& params) {
    if (v == Variant::CompleteGraph)
        return repair_by_transfer_complete_graph(failed, contents, params);
    if (transfer_admissible(v, failed, helpers, params)) {
        if (v == Variant::C1) return repair_by_transfer_c1(failed, helpers, contents, vectors, params);
        if (v == Variant::C2) return repair_by_transfer_c2(failed, helpers, contents, vectors, params);
    }
    return repair_compute(v, failed, helpers, contents, vectors, params);
}

}  // namespace

TrafficSummary run_workload(Variant v, const SystemParams& params,
                            std::span<const symbol_t> message, const Workload& workload) {
    if (!variant_admissible(v, params))
        throw std::invalid_argument(variant_name(v) + " is not admissible at these parameters");
    const EncodingVectors vectors = build_encoding_vectors(params);
    auto contents = v == Variant::CompleteGraph ? encode_complete_graph(message, params)
                                                : encode(v, message, vectors, params);
    std::mt19937_64 rng(workload.seed);

    TrafficSummary summary{};
    summary.variant = v;
    summary.events = workload.events.size();
    std::size_t pure = 0;

    for (const auto& event : workload.events) {
        switch (event.type) {
            case WorkloadEvent::Type::Fail:
            case WorkloadEvent::Type::DegradedRead: {
                const std::uint32_t node = event.node;
                if (node < 1 || node > params.n)
                    throw std::invalid_argument("workload event on unknown node " +
                                                std::to_string(node));
                const auto helpers = choose_helpers(v, node, params, workload.policy, rng);
                auto result = run_repair(v, node, helpers, contents, vectors, params);
                if (result.content.symbols != contents[node - 1].symbols)
                    throw std::logic_error("repair did not restore node " + std::to_string(node) +
                                           " exactly");
                summary.read += result.metrics.total_read();
                summary.download += result.metrics.total_download();
                if (result.metrics.pure_transfer) ++pure;
                ++summary.recoveries;
                if (event.type == WorkloadEvent::Type::Fail)
                    contents[node - 1] = std::move(result.content);
                summary.per_recovery.push_back(std::move(result.metrics));
                break;
            }
            case WorkloadEvent::Type::FullRead: {
                std::vector<std::uint32_t> subset;
                if (workload.policy == HelperPolicy::RandomAdmissible) {
                    auto ids = all_nodes(params.n);
                    deterministic_shuffle(ids, rng);
                    ids.resize(params.k);
                    std::sort(ids.begin(), ids.end());
                    subset = ids;
                } else {
                    subset = all_nodes(params.n);
                    subset.resize(params.k);
                }
                std::vector<NodeContent> picked;
                for (auto id : subset) picked.push_back(contents[id - 1]);
                const auto decoded = decode_all(v, picked, vectors, params);
                if (!std::equal(decoded.begin(), decoded.end(), message.begin(), message.end()))
                    throw std::logic_error("full read did not reproduce the message");
                // the collector reads and downloads all alpha symbols of k nodes
                summary.read += std::uint64_t{params.k} * params.alpha();
                summary.download += std::uint64_t{params.k} * params.alpha();
                break;
            }
        }
    }

    const std::uint64_t bound = std::uint64_t{params.d} * params.beta;  // per recovery
    std::uint64_t recovery_read = 0, recovery_download = 0;
    for (const auto& m : summary.per_recovery) {
        recovery_read += m.total_read();
        recovery_download += m.total_download();
    }
    if (summary.recoveries > 0) {
        summary.read_ratio = static_cast<double>(recovery_read) /
                             static_cast<double>(bound * summary.recoveries);
        summary.download_ratio = static_cast<double>(recovery_download) /
                                 static_cast<double>(bound * summary.recoveries);
        summary.pure_transfer_frac =
            static_cast<double>(pure) / static_cast<double>(summary.recoveries);
    }
    return summary;
}

std::vector<TrafficSummary> compare_variants(const SystemParams& params,
                                             std::span<const symbol_t> message,
                                             const Workload& workload) {
    std::vector<TrafficSummary> rows;
    for (Variant v : {Variant::Baseline, Variant::C1, Variant::C2, Variant::CompleteGraph})
        if (variant_admissible(v, params)) rows.push_back(run_workload(v, params, message, workload));
    return rows;
}

}  // namespace mbr
