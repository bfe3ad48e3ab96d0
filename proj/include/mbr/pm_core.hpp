#ifndef MBR_PM_CORE_HPP
#define MBR_PM_CORE_HPP

#include <span>
#include <vector>

#include "mbr/matrix.hpp"
#include "mbr/params.hpp"

namespace mbr {

/// The n encoding vectors of the product-matrix construction; row i-1 of
/// psi is the d-length vector of node i. Any d rows are linearly
/// independent, and any k rows restricted to the first k columns are
/// linearly independent.
struct EncodingVectors {
    Matrix psi;  // n x d

    /// 1 x d row for node id (1-based), as a matrix.
    Matrix node_row(std::uint32_t node_id) const;

    /// d x 1 column vector psi_i for node id (1-based).
    Matrix node_column(std::uint32_t node_id) const;
};

/// Vandermonde rows over the nonzero points 1..n. Throws if the field
/// cannot supply n distinct nonzero points (q <= n). Both independence
/// conditions are rank-checked exhaustively for small n.
EncodingVectors build_encoding_vectors(const SystemParams& params);

/// Arranges one stripe of k*d - C(k,2) message symbols as the d x d
/// symmetric matrix [S R; R^T 0]. Fill order: upper triangle of S
/// row-major, then R row-major.
Matrix build_message_matrix(std::span<const symbol_t> stripe_message, const SystemParams& params);

/// Exact inverse of build_message_matrix. Throws if the matrix violates
/// the required structure (asymmetry, nonzero lower-right block).
std::vector<symbol_t> flatten_message_matrix(const Matrix& m, const SystemParams& params);

}  // namespace mbr

#endif
