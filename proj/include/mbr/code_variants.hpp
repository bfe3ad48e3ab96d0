#ifndef MBR_CODE_VARIANTS_HPP
#define MBR_CODE_VARIANTS_HPP

#include <span>
#include <string>
#include <vector>

#include "mbr/pm_core.hpp"

namespace mbr {

enum class Variant : std::uint8_t {
    Baseline = 0,       // node i stores psi_i^T M
    C1 = 1,             // node i stores psi_i^T M Psi0, Psi0 = [psi_1 .. psi_d]
    C2 = 2,             // node i stores psi_i^T M [psi_{i(+)1} .. psi_{i(+)d}]
    CompleteGraph = 3,  // d = n-1 only: one MDS symbol per undirected edge
};

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// Cyclic index arithmetic on {1..n}: x (+) y = 1 + ((x-1+y) mod n).
std::uint32_t cyclic_add(std::uint32_t x, std::uint32_t y, std::uint32_t n);
std::uint32_t cyclic_sub(std::uint32_t x, std::uint32_t y, std::uint32_t n);

/// The alpha stored symbols of one node: beta stripes, stripe s occupying
/// symbols [s*d, (s+1)*d) (CompleteGraph: [s*(n-1), (s+1)*(n-1))).
struct NodeContent {
    std::uint32_t node_id = 0;
    Variant variant = Variant::Baseline;
    std::vector<symbol_t> symbols;

    std::span<const symbol_t> stripe(std::uint32_t s, std::uint32_t per_stripe) const {
        return std::span<const symbol_t>(symbols).subspan(s * per_stripe, per_stripe);
    }
};

/// True iff the variant can operate at these parameters (CompleteGraph
/// needs d = n-1 and enough MDS evaluation points; the product-matrix
/// variants need n distinct nonzero points for the encoding vectors).
bool variant_admissible(Variant v, const SystemParams& params);

/// The invertible d x d matrix phi_i with stored(i) = psi_i^T M phi_i.
/// Not defined for CompleteGraph (throws: not a baseline transform).
Matrix node_transform(Variant v, std::uint32_t node_id, const EncodingVectors& vectors,
                      const SystemParams& params);

/// Product-matrix encoding of B = beta*(kd - C(k,2)) message symbols into
/// n node contents. Stripe s of the message fills one message matrix.
std::vector<NodeContent> encode(Variant v, std::span<const symbol_t> message,
                                const EncodingVectors& vectors, const SystemParams& params);

/// Single-stripe encoding from a prebuilt message matrix.
std::vector<std::vector<symbol_t>> encode_stripe(Variant v, const Matrix& m,
                                                 const EncodingVectors& vectors,
                                                 const SystemParams& params);

/// Edge index helpers for the complete-graph code: undirected edges {i,j},
/// i < j, in lexicographic order, 0-based.
std::uint32_t edge_count(std::uint32_t n);
std::uint32_t edge_index(std::uint32_t i, std::uint32_t j, std::uint32_t n);

/// d = n-1 repair-by-transfer code: per stripe, the kd - C(k,2) message
/// symbols are spread over the n(n-1)/2 edges by a Reed-Solomon style MDS
/// code (polynomial evaluation at points 1..n(n-1)/2); node i stores the
/// symbols of its incident edges in ascending neighbor order.
std::vector<NodeContent> encode_complete_graph(std::span<const symbol_t> message,
                                               const SystemParams& params);

/// The B positions, in documented order, at which the message appears
/// verbatim under C1 after systematic precoding: for node i = 1..k its
/// stored symbols j = i..d (1-based), stripe by stripe.
struct SystematicPosition {
    std::uint32_t node_id;  // 1..k
    std::uint32_t index;    // 0-based position within the node's stripe content
};
std::vector<SystematicPosition> systematic_positions(const SystemParams& params);

/// The invertible B0 x B0 map from one stripe of message matrix entries to
/// the stored values at the systematic positions, built once per config.
Matrix systematic_precode_map(const EncodingVectors& vectors, const SystemParams& params);

/// Returns per-stripe message matrices M such that encoding them under C1
/// places the given message symbols verbatim at systematic_positions().
std::vector<Matrix> precode_systematic(std::span<const symbol_t> message,
                                       const EncodingVectors& vectors, const SystemParams& params);

/// Inverse companion of precode_systematic: maps decoded matrix-entry
/// symbols back to the original raw message.
std::vector<symbol_t> postcode_systematic(std::span<const symbol_t> coefficients,
                                          const EncodingVectors& vectors,
                                          const SystemParams& params);

}  // namespace mbr

#endif
