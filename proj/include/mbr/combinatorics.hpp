#ifndef MBR_COMBINATORICS_HPP
#define MBR_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

namespace mbr {

/// All r-element subsets of `items`, in lexicographic order of positions.
template <typename T>
std::vector<std::vector<T>> combinations(const std::vector<T>& items, std::size_t r) {
    std::vector<std::vector<T>> out;
    if (r > items.size()) return out;
    const std::size_t n = items.size();
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        std::vector<T> subset(r);
        for (std::size_t i = 0; i < r; ++i) subset[i] = items[idx[i]];
        out.push_back(std::move(subset));
        // rightmost position that can still advance
        std::size_t i = r;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] < i + n - r) {
                ++idx[i];
                for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return out;
    }
}

/// Node ids 1..n.
inline std::vector<std::uint32_t> all_nodes(std::uint32_t n) {
    std::vector<std::uint32_t> ids(n);
    for (std::uint32_t i = 0; i < n; ++i) ids[i] = i + 1;
    return ids;
}

/// Node ids 1..n with `excluded` removed.
inline std::vector<std::uint32_t> nodes_except(std::uint32_t n, std::uint32_t excluded) {
    std::vector<std::uint32_t> ids;
    ids.reserve(n - 1);
    for (std::uint32_t i = 1; i <= n; ++i)
        if (i != excluded) ids.push_back(i);
    return ids;
}

}  // namespace mbr

#endif
