#include "mbr/code_variants.hpp"

#include <stdexcept>

namespace mbr {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Baseline: return "baseline";
        case Variant::C1: return "c1";
        case Variant::C2: return "c2";
        case Variant::CompleteGraph: return "complete";
    }
    throw std::invalid_argument("unknown variant");
}

Variant variant_from_name(const std::string& name) {
    if (name == "baseline") return Variant::Baseline;
    if (name == "c1") return Variant::C1;
    if (name == "c2") return Variant::C2;
    if (name == "complete") return Variant::CompleteGraph;
    throw std::invalid_argument("unknown variant name: " + name);
}

std::uint32_t cyclic_add(std::uint32_t x, std::uint32_t y, std::uint32_t n) {
    if (x < 1 || x > n) throw std::invalid_argument("cyclic_add: x out of 1..n");
    return 1 + (x - 1 + y) % n;
}

std::uint32_t cyclic_sub(std::uint32_t x, std::uint32_t y, std::uint32_t n) {
    if (x < 1 || x > n) throw std::invalid_argument("cyclic_sub: x out of 1..n");
    const std::uint32_t yr = y % n;
    return 1 + (x - 1 + n - yr) % n;
}

bool variant_admissible(Variant v, const SystemParams& params) {
    if (v == Variant::CompleteGraph)
        return params.d == params.n - 1 && params.field.size() >= edge_count(params.n) + 1;
    return params.field.size() > params.n;  // n distinct nonzero evaluation points
}

Matrix node_transform(Variant v, std::uint32_t node_id, const EncodingVectors& vectors,
                      const SystemParams& params) {
    if (node_id < 1 || node_id > params.n) throw std::invalid_argument("node id out of range");
    const std::uint32_t d = params.d;
    switch (v) {
        case Variant::Baseline:
            return Matrix::identity(params.field, d);
        case Variant::C1: {
            // Psi0 = [psi_1 .. psi_d]
            Matrix phi(params.field, d, d);
            for (std::uint32_t col = 0; col < d; ++col)
                for (std::uint32_t r = 0; r < d; ++r) phi(r, col) = vectors.psi(col, r);
            return phi;
        }
        case Variant::C2: {
            Matrix phi(params.field, d, d);
            for (std::uint32_t t = 1; t <= d; ++t) {
                const std::uint32_t j = cyclic_add(node_id, t, params.n);
                for (std::uint32_t r = 0; r < d; ++r) phi(r, t - 1) = vectors.psi(j - 1, r);
            }
            return phi;
        }
        case Variant::CompleteGraph:
            throw std::invalid_argument(
                "complete-graph storage is not expressible as a baseline transform");
    }
    throw std::invalid_argument("unknown variant");
}

std::vector<std::vector<symbol_t>> encode_stripe(Variant v, const Matrix& m,
                                                 const EncodingVectors& vectors,
                                                 const SystemParams& params) {
    if (v == Variant::CompleteGraph)
        throw std::invalid_argument("use encode_complete_graph for the complete-graph code");
    std::vector<std::vector<symbol_t>> out;
    out.reserve(params.n);
    for (std::uint32_t i = 1; i <= params.n; ++i) {
        Matrix row = vectors.node_row(i) * m;  // 1 x d
        if (v != Variant::Baseline) row = row * node_transform(v, i, vectors, params);
        out.emplace_back(row.row(0).begin(), row.row(0).end());
    }
    return out;
}

std::vector<NodeContent> encode(Variant v, std::span<const symbol_t> message,
                                const EncodingVectors& vectors, const SystemParams& params) {
    if (message.size() != params.message_size())
        throw std::invalid_argument("message must have B = " +
                                    std::to_string(params.message_size()) + " symbols");
    const std::uint32_t b0 = params.stripe_message_size();
    std::vector<NodeContent> contents(params.n);
    for (std::uint32_t i = 0; i < params.n; ++i) {
        contents[i].node_id = i + 1;
        contents[i].variant = v;
        contents[i].symbols.reserve(params.alpha());
    }
    for (std::uint32_t s = 0; s < params.beta; ++s) {
        const Matrix m = build_message_matrix(message.subspan(s * b0, b0), params);
        auto stripe = encode_stripe(v, m, vectors, params);
        for (std::uint32_t i = 0; i < params.n; ++i)
            contents[i].symbols.insert(contents[i].symbols.end(), stripe[i].begin(),
                                       stripe[i].end());
    }
    return contents;
}

std::uint32_t edge_count(std::uint32_t n) { return n * (n - 1) / 2; }

std::uint32_t edge_index(std::uint32_t i, std::uint32_t j, std::uint32_t n) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("edge endpoints must be distinct nodes in 1..n");
    if (i > j) std::swap(i, j);
    // edges (1,2),(1,3),..,(1,n),(2,3),.. in lexicographic order
    return (i - 1) * n - i * (i - 1) / 2 + (j - i) - 1;
}

std::vector<NodeContent> encode_complete_graph(std::span<const symbol_t> message,
                                               const SystemParams& params) {
    const std::uint32_t n = params.n;
    if (params.d != n - 1)
        throw std::invalid_argument("complete-graph code requires d = n-1");
    const std::uint32_t edges = edge_count(n);
    if (params.field.size() < edges + 1)
        throw std::invalid_argument("field too small for " + std::to_string(edges) +
                                    " MDS evaluation points");
    if (message.size() != params.message_size())
        throw std::invalid_argument("message must have B = " +
                                    std::to_string(params.message_size()) + " symbols");
    const Field& f = params.field;
    const std::uint32_t b0 = params.stripe_message_size();
    std::vector<NodeContent> contents(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        contents[i].node_id = i + 1;
        contents[i].variant = Variant::CompleteGraph;
        contents[i].symbols.reserve(params.alpha());
    }
    for (std::uint32_t s = 0; s < params.beta; ++s) {
        const auto stripe_msg = message.subspan(s * b0, b0);
        std::vector<symbol_t> edge_symbols(edges, 0);
        for (std::uint32_t e = 0; e < edges; ++e) {
            const symbol_t x = static_cast<symbol_t>(e + 1);
            symbol_t acc = 0;
            for (std::uint32_t t = 0; t < b0; ++t)
                acc = f.add(acc, f.mul(stripe_msg[t], f.pow(x, t)));
            edge_symbols[e] = acc;
        }
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = 1; j <= n; ++j) {
                if (j == i) continue;
                contents[i - 1].symbols.push_back(edge_symbols[edge_index(i, j, n)]);
            }
    }
    return contents;
}

std::vector<SystematicPosition> systematic_positions(const SystemParams& params) {
    std::vector<SystematicPosition> out;
    out.reserve(params.stripe_message_size());
    for (std::uint32_t i = 1; i <= params.k; ++i)
        for (std::uint32_t j = i; j <= params.d; ++j) out.push_back({i, j - 1});
    return out;
}

Matrix systematic_precode_map(const EncodingVectors& vectors, const SystemParams& params) {
    const std::uint32_t b0 = params.stripe_message_size();
    const auto positions = systematic_positions(params);
    Matrix map(params.field, b0, b0);
    std::vector<symbol_t> unit(b0, 0);
    for (std::uint32_t t = 0; t < b0; ++t) {
        unit[t] = 1;
        const Matrix m = build_message_matrix(unit, params);
        const auto stripe = encode_stripe(Variant::C1, m, vectors, params);
        for (std::uint32_t r = 0; r < b0; ++r)
            map(r, t) = stripe[positions[r].node_id - 1][positions[r].index];
        unit[t] = 0;
    }
    return map;
}

std::vector<Matrix> precode_systematic(std::span<const symbol_t> message,
                                       const EncodingVectors& vectors,
                                       const SystemParams& params) {
    if (message.size() != params.message_size())
        throw std::invalid_argument("message must have B = " +
                                    std::to_string(params.message_size()) + " symbols");
    const std::uint32_t b0 = params.stripe_message_size();
    const Matrix inv_map = mat_inverse(systematic_precode_map(vectors, params));
    std::vector<Matrix> out;
    out.reserve(params.beta);
    for (std::uint32_t s = 0; s < params.beta; ++s) {
        Matrix rhs(params.field, b0, 1);
        for (std::uint32_t r = 0; r < b0; ++r) rhs(r, 0) = message[s * b0 + r];
        const Matrix coeffs = inv_map * rhs;
        std::vector<symbol_t> entries(b0);
        for (std::uint32_t r = 0; r < b0; ++r) entries[r] = coeffs(r, 0);
        out.push_back(build_message_matrix(entries, params));
    }
    return out;
}

std::vector<symbol_t> postcode_systematic(std::span<const symbol_t> coefficients,
                                          const EncodingVectors& vectors,
                                          const SystemParams& params) {
    if (coefficients.size() != params.message_size())
        throw std::invalid_argument("coefficient vector must have B symbols");
    const std::uint32_t b0 = params.stripe_message_size();
    const Matrix map = systematic_precode_map(vectors, params);
    std::vector<symbol_t> out(coefficients.size());
    for (std::uint32_t s = 0; s < params.beta; ++s) {
        Matrix rhs(params.field, b0, 1);
        for (std::uint32_t r = 0; r < b0; ++r) rhs(r, 0) = coefficients[s * b0 + r];
        const Matrix raw = map * rhs;
        for (std::uint32_t r = 0; r < b0; ++r) out[s * b0 + r] = raw(r, 0);
    }
    return out;
}

}  // namespace mbr
