#include "mbr/rbt_search.hpp"

#include <algorithm>
#include <cstdlib>

#include "mbr/combinatorics.hpp"

namespace mbr {

std::uint64_t default_enumeration_budget() {
    if (const char* env = std::getenv("MBR_ENUM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

void SearchBudget::charge() {
    if (++used > limit)
        throw BudgetExceededError("enumeration budget of " + std::to_string(limit) +
                                  " rank tests exceeded");
}

ContentForms content_forms(Variant v, const SystemParams& params) {
    const SystemParams sp = params.stripe_view();
    const std::uint32_t b0 = sp.stripe_message_size();
    const std::uint32_t per_node = v == Variant::CompleteGraph ? sp.n - 1 : sp.d;

    ContentForms out{sp, {}};
    out.forms.assign(sp.n, Matrix(sp.field, per_node, b0));

    std::vector<symbol_t> unit(b0, 0);
    std::optional<EncodingVectors> vectors;
    if (v != Variant::CompleteGraph) vectors = build_encoding_vectors(sp);
    for (std::uint32_t t = 0; t < b0; ++t) {
        unit[t] = 1;
        const auto contents = v == Variant::CompleteGraph
                                  ? encode_complete_graph(unit, sp)
                                  : encode(v, unit, *vectors, sp);
        for (std::uint32_t i = 0; i < sp.n; ++i)
            for (std::uint32_t r = 0; r < per_node; ++r)
                out.forms[i](r, t) = contents[i].symbols[r];
        unit[t] = 0;
    }
    return out;
}

namespace {

// span(P) contains span(F) iff stacking F onto P does not raise the rank
bool spans(const Matrix& passed, const Matrix& failed_forms, SearchBudget& budget) {
    budget.charge();
    const std::size_t rank_p = mat_rank(passed);
    Matrix stacked(passed.field(), passed.rows() + failed_forms.rows(), passed.cols());
    for (std::size_t r = 0; r < passed.rows(); ++r) stacked.set_row(r, passed.row(r));
    for (std::size_t r = 0; r < failed_forms.rows(); ++r)
        stacked.set_row(passed.rows() + r, failed_forms.row(r));
    return mat_rank(std::move(stacked)) == rank_p;
}

}  // namespace

std::optional<TransferSchedule> schedule_feasible(const ContentForms& forms, std::uint32_t failed,
                                                  std::span<const std::uint32_t> helpers,
                                                  SearchBudget& budget) {
    const SystemParams& sp = forms.stripe_params;
    if (failed < 1 || failed > sp.n) throw std::invalid_argument("failed node id out of range");
    if (helpers.size() != sp.d) throw std::invalid_argument("helper set must have d nodes");
    const std::uint32_t per_node = forms.per_node();
    const Matrix& failed_forms = forms.forms[failed - 1];
    const std::size_t h = helpers.size();

    // odometer over one stored-symbol index per helper (beta = 1 stripe view)
    std::vector<std::uint32_t> choice(h, 0);
    Matrix passed(sp.field, h, failed_forms.cols());
    while (true) {
        for (std::size_t r = 0; r < h; ++r)
            passed.set_row(r, forms.forms[helpers[r] - 1].row(choice[r]));
        if (spans(passed, failed_forms, budget)) {
            TransferSchedule schedule;
            schedule.helpers.assign(helpers.begin(), helpers.end());
            for (std::size_t r = 0; r < h; ++r) schedule.indices.push_back({choice[r]});
            return schedule;
        }
        std::size_t pos = h;
        while (pos > 0) {
            --pos;
            if (++choice[pos] < per_node) break;
            choice[pos] = 0;
            if (pos == 0) return std::nullopt;
        }
    }
}

FeasibilityReport verify_theorem_witness(Variant v, const SystemParams& params,
                                         std::uint64_t budget_limit) {
    const ContentForms forms = content_forms(v, params);
    SearchBudget budget{budget_limit, 0};

    FeasibilityReport report{v, {}, true, 0};
    for (std::uint32_t failed = 1; failed <= params.n; ++failed) {
        for (const auto& helpers : combinations(nodes_except(params.n, failed), params.d)) {
            auto witness = schedule_feasible(forms, failed, helpers, budget);
            const bool feasible = witness.has_value();
            report.overall_feasible = report.overall_feasible && feasible;
            report.pairs.push_back({failed, helpers, feasible, std::move(witness)});
        }
    }
    report.rank_tests = budget.used;
    return report;
}

SharedSymbolCensus shared_symbol_census(Variant v, std::uint32_t node, const SystemParams& params,
                                        std::uint64_t budget_limit) {
    if (node < 1 || node > params.n) throw std::invalid_argument("node id out of range");
    const ContentForms forms = content_forms(v, params);
    SearchBudget budget{budget_limit, 0};
    const std::size_t max_events = params.d + 1;  // the proof's counting horizon

    SharedSymbolCensus census{node, {}, std::vector<std::uint32_t>(forms.per_node(), 0), false};
    for (std::uint32_t failed = 1; failed <= params.n && census.events.size() < max_events;
         ++failed) {
        if (failed == node) continue;
        for (const auto& helpers : combinations(nodes_except(params.n, failed), params.d)) {
            if (std::find(helpers.begin(), helpers.end(), node) == helpers.end()) continue;
            auto witness = schedule_feasible(forms, failed, helpers, budget);
            if (!witness) continue;
            const std::size_t pos = static_cast<std::size_t>(
                std::find(helpers.begin(), helpers.end(), node) - helpers.begin());
            const std::uint32_t index = witness->indices[pos][0];
            census.events.push_back({failed, helpers, index});
            ++census.index_counts[index];
            if (census.events.size() >= max_events) break;
        }
    }
    census.repeated = std::any_of(census.index_counts.begin(), census.index_counts.end(),
                                  [](std::uint32_t c) { return c >= 2; });
    return census;
}

}  // namespace mbr
