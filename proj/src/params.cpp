#include "mbr/params.hpp"

#include <stdexcept>
#include <string>

namespace mbr {

SystemParams SystemParams::make(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                                const Field& field, std::uint32_t beta) {
    if (k < 1 || k > d || d >= n)
        throw std::invalid_argument("parameters must satisfy 1 <= k <= d < n, got (n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) +
                                    ", d=" + std::to_string(d) + ")");
    if (field.size() < n)
        throw std::invalid_argument("field size " + std::to_string(field.size()) +
                                    " smaller than node count " + std::to_string(n));
    if (beta < 1) throw std::invalid_argument("beta must be positive");
    return SystemParams{n, k, d, field, beta};
}

SystemParams SystemParams::stripe_view() const {
    return SystemParams{n, k, d, field, 1};
}

}  // namespace mbr
