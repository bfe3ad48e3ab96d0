#ifndef MBR_PARAMS_HPP
#define MBR_PARAMS_HPP

#include <cstdint>

#include "mbr/field.hpp"

namespace mbr {

/// Validated (n, k, d, field, beta) tuple for the minimum-bandwidth
/// operating point: per-node storage alpha = d*beta, total message size
/// B = beta*(kd - k(k-1)/2). Use make() to construct.
struct SystemParams {
    std::uint32_t n;
    std::uint32_t k;
    std::uint32_t d;
    Field field;
    std::uint32_t beta;

    static SystemParams make(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                             const Field& field, std::uint32_t beta);

    std::uint32_t alpha() const { return d * beta; }

    /// Message symbols per stripe (the beta = 1 building block): kd - C(k,2).
    std::uint32_t stripe_message_size() const { return k * d - k * (k - 1) / 2; }

    /// Total message symbols B across the beta stripes.
    std::uint32_t message_size() const { return beta * stripe_message_size(); }

    /// Same parameters with beta = 1; repair and search reduce to this stripe-wise.
    SystemParams stripe_view() const;

    bool operator==(const SystemParams& other) const = default;
};

}  // namespace mbr

#endif
