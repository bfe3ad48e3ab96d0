#include "mbr/pm_core.hpp"

#include <stdexcept>
#include <string>

#include "mbr/combinatorics.hpp"

namespace mbr {

namespace {

// Exhaustive rank check of both independence conditions. Only run for
// small n; Vandermonde rows over distinct points satisfy them by
// construction, this guards the construction code itself.
void verify_independence(const Matrix& psi, const SystemParams& p) {
    if (p.n > 10) return;
    const auto ids = all_nodes(p.n);
    for (const auto& subset : combinations(ids, p.d)) {
        std::vector<std::span<const symbol_t>> rows;
        for (auto id : subset) rows.push_back(psi.row(id - 1));
        if (mat_rank(stack_rows(p.field, rows)) != p.d)
            throw std::logic_error("encoding vectors: a d-subset is dependent");
    }
    for (const auto& subset : combinations(ids, p.k)) {
        Matrix m(p.field, p.k, p.k);
        for (std::size_t r = 0; r < p.k; ++r)
            for (std::size_t c = 0; c < p.k; ++c) m(r, c) = psi(subset[r] - 1, c);
        if (mat_rank(m) != p.k)
            throw std::logic_error("encoding vectors: a first-k-column k-subset is dependent");
    }
}

}  // namespace

Matrix EncodingVectors::node_row(std::uint32_t node_id) const {
    Matrix r(psi.field(), 1, psi.cols());
    r.set_row(0, psi.row(node_id - 1));
    return r;
}

Matrix EncodingVectors::node_column(std::uint32_t node_id) const {
    Matrix c(psi.field(), psi.cols(), 1);
    for (std::size_t j = 0; j < psi.cols(); ++j) c(j, 0) = psi(node_id - 1, j);
    return c;
}

EncodingVectors build_encoding_vectors(const SystemParams& params) {
    const Field& f = params.field;
    if (f.size() <= params.n)
        throw std::invalid_argument("field of size " + std::to_string(f.size()) +
                                    " cannot supply " + std::to_string(params.n) +
                                    " distinct nonzero evaluation points");
    Matrix psi(f, params.n, params.d);
    for (std::uint32_t i = 0; i < params.n; ++i) {
        const symbol_t x = static_cast<symbol_t>(i + 1);
        for (std::uint32_t j = 0; j < params.d; ++j) psi(i, j) = f.pow(x, j);
    }
    verify_independence(psi, params);
    return EncodingVectors{std::move(psi)};
}

Matrix build_message_matrix(std::span<const symbol_t> stripe_message, const SystemParams& params) {
    const std::uint32_t k = params.k, d = params.d;
    if (stripe_message.size() != params.stripe_message_size())
        throw std::invalid_argument("stripe message must have " +
                                    std::to_string(params.stripe_message_size()) + " symbols, got " +
                                    std::to_string(stripe_message.size()));
    Matrix m(params.field, d, d);
    std::size_t pos = 0;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i; j < k; ++j) {
            m(i, j) = stripe_message[pos];
            m(j, i) = stripe_message[pos];
            ++pos;
        }
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = k; j < d; ++j) {
            m(i, j) = stripe_message[pos];
            m(j, i) = stripe_message[pos];
            ++pos;
        }
    return m;
}

std::vector<symbol_t> flatten_message_matrix(const Matrix& m, const SystemParams& params) {
    const std::uint32_t k = params.k, d = params.d;
    if (m.rows() != d || m.cols() != d)
        throw std::invalid_argument("message matrix must be d x d");
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = i + 1; j < d; ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("message matrix is not symmetric");
    for (std::uint32_t i = k; i < d; ++i)
        for (std::uint32_t j = k; j < d; ++j)
            if (m(i, j) != 0)
                throw std::invalid_argument("message matrix lower-right block is not zero");
    std::vector<symbol_t> out;
    out.reserve(params.stripe_message_size());
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i; j < k; ++j) out.push_back(m(i, j));
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = k; j < d; ++j) out.push_back(m(i, j));
    return out;
}

}  // namespace mbr
