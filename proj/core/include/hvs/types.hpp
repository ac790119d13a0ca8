#pragma once

#include <cstdint>
#include <vector>

namespace hvs {

/// Index of a vector in a space carrier (position in the carrier's label list).
using Elem = std::uint32_t;
/// Index of a scalar in a field (position in the field's label list).
using Scalar = std::uint32_t;

/// A subset of a carrier, kept sorted and duplicate-free.
using VectorSubset = std::vector<Elem>;

/// Sorts, deduplicates.
VectorSubset normalize_subset(VectorSubset s);

bool subset_contains(const VectorSubset& s, Elem x);

/// a ⊆ b for sorted unique vectors.
bool subset_of(const VectorSubset& a, const VectorSubset& b);

VectorSubset subset_union(const VectorSubset& a, const VectorSubset& b);
VectorSubset subset_intersection(const VectorSubset& a, const VectorSubset& b);

}  // namespace hvs
