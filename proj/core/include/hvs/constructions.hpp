#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hvs/bfs_set.hpp"

namespace hvs {

enum class CharVariant {
    pos,   // G⁺ = χ_X, G⁻ = 0
    neg,   // G⁺ = 0,   G⁻ = −χ_X
    both,  // G⁺ = χ_X, G⁻ = −χ_X (normal when X is a subhyperspace)
};

/// Characteristic construction over an arbitrary subset X. For every variant,
/// the result is a bfs-hvs exactly when X is a subhyperspace (with the one
/// boundary exception X = ∅, whose all-zero grades satisfy the definition
/// vacuously).
BipolarFuzzySoftSet characteristic_bfs(std::shared_ptr<const HyperVectorSpace> space,
                                       const VectorSubset& x,
                                       std::vector<std::string> params,
                                       CharVariant variant);

/// Promotes the (alpha,beta)-cut of parameter e0 to full grades (1,−1) in
/// every parameter, leaving everything else unchanged. f must be a bfs-hvs.
BipolarFuzzySoftSet level_promote(const BipolarFuzzySoftSet& f, const std::string& e0,
                                  const Rational& alpha, const Rational& beta);

/// Trace of the chain construction behind generate_bfs_hvs.
struct ShellDecomposition {
    std::vector<VectorSubset> chain;    // W_0 ⊂ W_1 ⊂ ... ⊂ W_l = carrier
    std::vector<VectorSubset> seeds;    // U_0, ..., U_l
    std::vector<VectorSubset> shells;   // Ŵ_0 = W_0, Ŵ_i = W_i \ W_{i-1}
    // grades assigned to each shell, [shell][param]
    std::vector<std::vector<Rational>> pos_grades;
    std::vector<std::vector<Rational>> neg_grades;
};

struct GeneratedBfs {
    BipolarFuzzySoftSet result;
    ShellDecomposition shells;
};

/// Smallest bfs-hvs containing f, built by the shell construction:
/// U_0 collects the elements attaining every parameter's global sup/inf,
/// W_0 = ⟨U_0⟩, then U_i repeats the argument over V∖W_{i-1} and
/// W_i = ⟨W_{i-1} ∪ U_i⟩ until the chain covers the carrier. Throws
/// ConstructionStuckError when some U_i is empty before that happens.
GeneratedBfs generate_bfs_hvs(const BipolarFuzzySoftSet& f);

/// g⁺(0) = 1 and g⁻(0) = −1 for every parameter. g must be a bfs-hvs.
bool is_normal(const BipolarFuzzySoftSet& g);

enum class NegativeShiftRule {
    /// g⁻(x) − 1 − g⁻(0): anchors the zero vector's negative grade at −1.
    anchor,
    /// g⁻(x) − 1 + g⁻(0): the sign-mirrored positive offset. Leaves [−1,0]
    /// for any input whose negative grades are not identically zero, in
    /// which case a DomainError names the first escaping grade. Kept for
    /// comparison only.
    mirror,
};

/// Shift normalization: g̃⁺(x) = g⁺(x) + 1 − g⁺(0) and the negative rule
/// above. Result is a normal bfs-hvs containing g; identity on normal input.
BipolarFuzzySoftSet normalize_shift(const BipolarFuzzySoftSet& g,
                                    NegativeShiftRule rule = NegativeShiftRule::anchor);

/// Scale normalization: ğ⁺(x) = g⁺(x)/g⁺(0), ğ⁻(x) = −g⁻(x)/g⁻(0).
/// Requires g⁺(0) > 0 and g⁻(0) < 0 for every parameter.
BipolarFuzzySoftSet normalize_scale(const BipolarFuzzySoftSet& g);

}  // namespace hvs
