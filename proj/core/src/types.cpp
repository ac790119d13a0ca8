#include "hvs/types.hpp"

#include <algorithm>

namespace hvs {

VectorSubset normalize_subset(VectorSubset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool subset_contains(const VectorSubset& s, Elem x) {
    return std::binary_search(s.begin(), s.end(), x);
}

bool subset_of(const VectorSubset& a, const VectorSubset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VectorSubset subset_union(const VectorSubset& a, const VectorSubset& b) {
    VectorSubset out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VectorSubset subset_intersection(const VectorSubset& a, const VectorSubset& b) {
    VectorSubset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace hvs
