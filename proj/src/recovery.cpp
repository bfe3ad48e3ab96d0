#include "mbr/recovery.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mbr {

namespace {

void require_helper_set(std::uint32_t failed, std::span<const std::uint32_t> helpers,
                        const SystemParams& params) {
    if (failed < 1 || failed > params.n) throw std::invalid_argument("failed node id out of range");
    if (helpers.size() != params.d)
        throw std::invalid_argument("expected exactly d = " + std::to_string(params.d) +
                                    " helpers, got " + std::to_string(helpers.size()));
    std::set<std::uint32_t> seen;
    for (auto h : helpers) {
        if (h < 1 || h > params.n) throw std::invalid_argument("helper id out of range");
        if (h == failed) throw std::invalid_argument("failed node cannot be its own helper");
        if (!seen.insert(h).second) throw std::invalid_argument("duplicate helper id");
    }
}

const NodeContent& content_of(std::uint32_t id, const std::vector<NodeContent>& contents,
                              Variant expected) {
    for (const auto& c : contents)
        if (c.node_id == id) {
            if (c.variant != expected)
                throw std::invalid_argument("node " + std::to_string(id) +
                                            " holds " + variant_name(c.variant) +
                                            " content, expected " + variant_name(expected));
            return c;
        }
    throw std::invalid_argument("no content for node " + std::to_string(id));
}

// Replacement-side reconstruction shared by all product-matrix repair
// paths: from the d values psi_l^T M psi_f, solve for M psi_f, use
// symmetry to obtain psi_f^T M, and re-apply the failed node's transform.
std::vector<symbol_t> reconstruct_stripes(Variant v, std::uint32_t failed,
                                          std::span<const std::uint32_t> helpers,
                                          const std::vector<std::vector<symbol_t>>& responses,
                                          const EncodingVectors& vectors,
                                          const SystemParams& params) {
    const std::uint32_t d = params.d;
    Matrix psi_h(params.field, d, d);
    for (std::uint32_t r = 0; r < d; ++r) psi_h.set_row(r, vectors.psi.row(helpers[r] - 1));
    const Matrix psi_h_inv = mat_inverse(psi_h);
    const Matrix phi_f = node_transform(v, failed, vectors, params);

    std::vector<symbol_t> out;
    out.reserve(params.alpha());
    for (std::uint32_t s = 0; s < params.beta; ++s) {
        Matrix rhs(params.field, d, 1);
        for (std::uint32_t r = 0; r < d; ++r) rhs(r, 0) = responses[r][s];
        const Matrix m_psi_f = psi_h_inv * rhs;          // M psi_f
        const Matrix row = m_psi_f.transpose() * phi_f;  // psi_f^T M phi_f
        out.insert(out.end(), row.row(0).begin(), row.row(0).end());
    }
    return out;
}

RepairMetrics make_metrics(Variant v, std::uint32_t failed, std::span<const std::uint32_t> helpers,
                           std::uint64_t read_each, std::uint64_t download_each,
                           bool pure_transfer) {
    RepairMetrics m;
    m.variant = v;
    m.failed = failed;
    m.helpers.assign(helpers.begin(), helpers.end());
    m.read.assign(helpers.size(), read_each);
    m.download.assign(helpers.size(), download_each);
    m.pure_transfer = pure_transfer;
    return m;
}

}  // namespace

std::uint64_t RepairMetrics::total_read() const {
    return std::accumulate(read.begin(), read.end(), std::uint64_t{0});
}

std::uint64_t RepairMetrics::total_download() const {
    return std::accumulate(download.begin(), download.end(), std::uint64_t{0});
}

std::string RepairMetrics::csv_header() {
    return "variant,failed,helpers,read,download,pure_transfer";
}

std::string RepairMetrics::csv_row() const {
    auto join = [](const auto& values) {
        std::ostringstream os;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) os << ';';
            os << values[i];
        }
        return os.str();
    };
    std::ostringstream os;
    os << variant_name(variant) << ',' << failed << ',' << join(helpers) << ',' << join(read)
       << ',' << join(download) << ',' << (pure_transfer ? "true" : "false");
    return os.str();
}

RepairResult repair_compute(Variant v, std::uint32_t failed, std::span<const std::uint32_t> helpers,
                            const std::vector<NodeContent>& contents,
                            const EncodingVectors& vectors, const SystemParams& params) {
    if (v == Variant::CompleteGraph)
        throw std::invalid_argument("complete-graph code repairs by transfer only");
    require_helper_set(failed, helpers, params);
    const std::uint32_t d = params.d;
    const Matrix psi_f = vectors.node_column(failed);

    std::vector<std::vector<symbol_t>> responses(d);
    for (std::uint32_t r = 0; r < d; ++r) {
        const NodeContent& helper = content_of(helpers[r], contents, v);
        // weight vector phi_l^{-1} psi_f; the helper's inner product with
        // its stored stripe equals psi_l^T M psi_f
        const Matrix weights =
            mat_solve(node_transform(v, helpers[r], vectors, params), psi_f);
        responses[r].resize(params.beta);
        for (std::uint32_t s = 0; s < params.beta; ++s) {
            const auto stored = helper.stripe(s, d);
            symbol_t acc = 0;
            for (std::uint32_t c = 0; c < d; ++c)
                acc = params.field.add(acc, params.field.mul(stored[c], weights(c, 0)));
            responses[r][s] = acc;
        }
    }

    RepairResult result;
    result.content.node_id = failed;
    result.content.variant = v;
    result.content.symbols = reconstruct_stripes(v, failed, helpers, responses, vectors, params);
    result.metrics = make_metrics(v, failed, helpers, params.alpha(), params.beta, false);
    return result;
}

RepairResult repair_by_transfer_c1(std::uint32_t failed, std::span<const std::uint32_t> helpers,
                                   const std::vector<NodeContent>& contents,
                                   const EncodingVectors& vectors, const SystemParams& params) {
    require_helper_set(failed, helpers, params);
    if (failed > params.d)
        throw std::invalid_argument("c1 transfer repair covers nodes 1..d only; use the compute path");
    const std::uint32_t d = params.d;

    std::vector<std::vector<symbol_t>> responses(d);
    for (std::uint32_t r = 0; r < d; ++r) {
        const NodeContent& helper = content_of(helpers[r], contents, Variant::C1);
        responses[r].resize(params.beta);
        for (std::uint32_t s = 0; s < params.beta; ++s)
            responses[r][s] = helper.stripe(s, d)[failed - 1];  // psi_l^T M psi_f verbatim
    }

    RepairResult result;
    result.content.node_id = failed;
    result.content.variant = Variant::C1;
    result.content.symbols =
        reconstruct_stripes(Variant::C1, failed, helpers, responses, vectors, params);
    result.metrics = make_metrics(Variant::C1, failed, helpers, params.beta, params.beta, true);
    return result;
}

std::vector<std::uint32_t> designated_helpers_c2(std::uint32_t failed, const SystemParams& params) {
    std::vector<std::uint32_t> out;
    out.reserve(params.d);
    for (std::uint32_t t = params.d; t >= 1; --t)
        out.push_back(cyclic_sub(failed, t, params.n));
    return out;
}

RepairResult repair_by_transfer_c2(std::uint32_t failed, std::span<const std::uint32_t> helpers,
                                   const std::vector<NodeContent>& contents,
                                   const EncodingVectors& vectors, const SystemParams& params) {
    require_helper_set(failed, helpers, params);
    const auto designated = designated_helpers_c2(failed, params);
    if (!std::is_permutation(helpers.begin(), helpers.end(), designated.begin()))
        throw std::invalid_argument(
            "c2 transfer repair requires the designated helper set for node " +
            std::to_string(failed));
    const std::uint32_t d = params.d;

    // helper l = failed (-) t stores psi_l^T M psi_{l (+) t}; position t holds
    // exactly psi_l^T M psi_failed
    std::vector<std::uint32_t> ordered(designated);
    std::vector<std::vector<symbol_t>> responses(d);
    for (std::uint32_t r = 0; r < d; ++r) {
        const std::uint32_t t = d - r;  // ordered[r] = failed (-) t
        const NodeContent& helper = content_of(ordered[r], contents, Variant::C2);
        responses[r].resize(params.beta);
        for (std::uint32_t s = 0; s < params.beta; ++s)
            responses[r][s] = helper.stripe(s, d)[t - 1];
    }

    RepairResult result;
    result.content.node_id = failed;
    result.content.variant = Variant::C2;
    result.content.symbols =
        reconstruct_stripes(Variant::C2, failed, ordered, responses, vectors, params);
    result.metrics = make_metrics(Variant::C2, failed, ordered, params.beta, params.beta, true);
    return result;
}

RepairResult repair_by_transfer_complete_graph(std::uint32_t failed,
                                               const std::vector<NodeContent>& contents,
                                               const SystemParams& params) {
    const std::uint32_t n = params.n;
    if (params.d != n - 1)
        throw std::invalid_argument("complete-graph repair requires d = n-1");
    if (failed < 1 || failed > n) throw std::invalid_argument("failed node id out of range");
    const std::uint32_t per_stripe = n - 1;

    RepairResult result;
    result.content.node_id = failed;
    result.content.variant = Variant::CompleteGraph;
    result.content.symbols.reserve(params.alpha());
    std::vector<std::uint32_t> helpers;
    for (std::uint32_t j = 1; j <= n; ++j)
        if (j != failed) helpers.push_back(j);

    for (std::uint32_t s = 0; s < params.beta; ++s) {
        for (auto j : helpers) {
            const NodeContent& helper = content_of(j, contents, Variant::CompleteGraph);
            // position of neighbor `failed` in helper j's ascending edge list
            const std::uint32_t pos = failed < j ? failed - 1 : failed - 2;
            result.content.symbols.push_back(helper.stripe(s, per_stripe)[pos]);
        }
    }
    result.metrics = make_metrics(Variant::CompleteGraph, failed, helpers, params.beta,
                                  params.beta, true);
    return result;
}

namespace {

std::vector<symbol_t> decode_complete_graph(const std::vector<NodeContent>& nodes,
                                            const SystemParams& params) {
    const Field& f = params.field;
    const std::uint32_t n = params.n;
    const std::uint32_t b0 = params.stripe_message_size();
    const std::uint32_t per_stripe = n - 1;

    // the k nodes jointly hold exactly B0 distinct edge symbols per stripe
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sources;  // (node index, position)
    std::vector<std::uint32_t> edge_ids;
    std::set<std::uint32_t> seen;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        const std::uint32_t i = nodes[a].node_id;
        std::uint32_t pos = 0;
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (j == i) continue;
            const std::uint32_t e = edge_index(i, j, n);
            if (seen.insert(e).second) {
                sources.emplace_back(a, pos);
                edge_ids.push_back(e);
            }
            ++pos;
        }
    }
    if (edge_ids.size() != b0)
        throw std::logic_error("complete-graph decode: unexpected distinct edge count");

    Matrix vand(f, b0, b0);
    for (std::uint32_t r = 0; r < b0; ++r) {
        const symbol_t x = static_cast<symbol_t>(edge_ids[r] + 1);
        for (std::uint32_t c = 0; c < b0; ++c) vand(r, c) = f.pow(x, c);
    }
    const Matrix vand_inv = mat_inverse(vand);

    std::vector<symbol_t> message;
    message.reserve(params.message_size());
    for (std::uint32_t s = 0; s < params.beta; ++s) {
        Matrix rhs(f, b0, 1);
        for (std::uint32_t r = 0; r < b0; ++r)
            rhs(r, 0) = nodes[sources[r].first].stripe(s, per_stripe)[sources[r].second];
        const Matrix coeffs = vand_inv * rhs;
        for (std::uint32_t r = 0; r < b0; ++r) message.push_back(coeffs(r, 0));
    }
    return message;
}

}  // namespace

std::vector<symbol_t> decode_all(Variant v, const std::vector<NodeContent>& nodes,
                                 const EncodingVectors& vectors, const SystemParams& params) {
    const std::uint32_t k = params.k, d = params.d;
    std::vector<NodeContent> chosen;
    std::set<std::uint32_t> seen;
    for (const auto& nc : nodes) {
        if (nc.node_id < 1 || nc.node_id > params.n)
            throw std::invalid_argument("node id out of range");
        if (!seen.insert(nc.node_id).second)
            throw std::invalid_argument("duplicate node in decode input");
        if (nc.variant != v)
            throw std::invalid_argument("node " + std::to_string(nc.node_id) +
                                        " holds " + variant_name(nc.variant) +
                                        " content, expected " + variant_name(v));
        if (chosen.size() < k) chosen.push_back(nc);
    }
    if (chosen.size() < k)
        throw std::invalid_argument("decoding needs k = " + std::to_string(k) + " nodes, got " +
                                    std::to_string(chosen.size()));

    if (v == Variant::CompleteGraph) return decode_complete_graph(chosen, params);

    const Field& f = params.field;
    // A: first k components of the chosen psi rows; Bm: the rest
    Matrix a(f, k, k), bm(f, k, d - k);
    for (std::uint32_t r = 0; r < k; ++r) {
        const auto psi_row = vectors.psi.row(chosen[r].node_id - 1);
        for (std::uint32_t c = 0; c < k; ++c) a(r, c) = psi_row[c];
        for (std::uint32_t c = k; c < d; ++c) bm(r, c - k) = psi_row[c];
    }
    const Matrix a_inv = mat_inverse(a);

    // per-node de-transform back to the baseline stored form psi_i^T M
    std::vector<Matrix> phi_inv;
    phi_inv.reserve(k);
    for (std::uint32_t r = 0; r < k; ++r)
        phi_inv.push_back(
            mat_inverse(node_transform(v, chosen[r].node_id, vectors, params)));

    std::vector<symbol_t> message;
    message.reserve(params.message_size());
    for (std::uint32_t s = 0; s < params.beta; ++s) {
        Matrix collected(f, k, d);  // rows psi_i^T M
        for (std::uint32_t r = 0; r < k; ++r) {
            Matrix stored(f, 1, d);
            stored.set_row(0, chosen[r].stripe(s, d));
            const Matrix row = stored * phi_inv[r];
            collected.set_row(r, row.row(0));
        }
        // last d-k columns give A R; first k columns give A S + Bm R^T
        Matrix right(f, k, d - k), left(f, k, k);
        for (std::uint32_t r = 0; r < k; ++r) {
            for (std::uint32_t c = 0; c < d - k; ++c) right(r, c) = collected(r, k + c);
            for (std::uint32_t c = 0; c < k; ++c) left(r, c) = collected(r, c);
        }
        const Matrix rmat = a_inv * right;                               // k x (d-k)
        const Matrix smat = a_inv * mat_sub(left, bm * rmat.transpose());  // k x k

        Matrix m(f, d, d);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) m(i, j) = smat(i, j);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = k; j < d; ++j) {
                m(i, j) = rmat(i, j - k);
                m(j, i) = rmat(i, j - k);
            }
        const auto stripe_msg = flatten_message_matrix(m, params);  // checks S symmetry
        message.insert(message.end(), stripe_msg.begin(), stripe_msg.end());
    }
    return message;
}

}  // namespace mbr
