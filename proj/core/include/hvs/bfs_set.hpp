#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hvs/hypervector_space.hpp"
#include "hvs/rational.hpp"
#include "hvs/types.hpp"

namespace hvs {

/// Grade maps of one parameter: pos into [0,1], neg into [-1,0], both total
/// over the carrier.
struct BipolarFuzzySet {
    std::vector<Rational> pos;
    std::vector<Rational> neg;

    bool operator==(const BipolarFuzzySet&) const = default;
};

/// A parameter-indexed family of bipolar fuzzy sets over one space.
class BipolarFuzzySoftSet {
public:
    static BipolarFuzzySoftSet make(std::shared_ptr<const HyperVectorSpace> space,
                                    std::vector<std::string> params,
                                    std::vector<BipolarFuzzySet> grades);

    [[nodiscard]] const HyperVectorSpace& space() const { return *space_; }
    [[nodiscard]] const std::shared_ptr<const HyperVectorSpace>& space_ptr() const {
        return space_;
    }
    [[nodiscard]] const std::vector<std::string>& params() const { return params_; }
    [[nodiscard]] const BipolarFuzzySet& grades(std::size_t i) const { return grades_[i]; }
    [[nodiscard]] const std::vector<BipolarFuzzySet>& grade_table() const {
        return grades_;
    }
    [[nodiscard]] std::size_t param_count() const { return params_.size(); }
    [[nodiscard]] std::optional<std::size_t> param_index(const std::string& name) const;

    [[nodiscard]] const Rational& pos(std::size_t param, Elem x) const {
        return grades_[param].pos[x];
    }
    [[nodiscard]] const Rational& neg(std::size_t param, Elem x) const {
        return grades_[param].neg[x];
    }

    bool operator==(const BipolarFuzzySoftSet& other) const;

private:
    std::shared_ptr<const HyperVectorSpace> space_;
    std::vector<std::string> params_;
    std::vector<BipolarFuzzySet> grades_;  // aligned with params_
};

struct LevelSoftSet {
    Rational alpha;
    Rational beta;
    std::vector<std::string> params;
    std::vector<VectorSubset> cuts;  // aligned with params
};

/// g ⊑ h: g's parameters are a subset of h's, and pointwise
/// g⁺ ≤ h⁺, g⁻ ≥ h⁻ on the shared parameters.
bool bfs_contains(const BipolarFuzzySoftSet& g, const BipolarFuzzySoftSet& h);

/// Parameters intersect; (g+h)⁺(x) = ⋁_{x=y+z} g⁺(y) ∧ h⁺(z) and dually.
BipolarFuzzySoftSet bfs_sum(const BipolarFuzzySoftSet& g, const BipolarFuzzySoftSet& h);

/// (b∘g)⁺(x) = ⋁ { g⁺(r) : x ∈ b∘r }, 0 when no r reaches x; dually for neg.
BipolarFuzzySoftSet bfs_scalar(Scalar b, const BipolarFuzzySoftSet& g);

/// (−g)(y) = g(−y) with −y from the group table.
BipolarFuzzySoftSet bfs_negate(const BipolarFuzzySoftSet& g);

/// Per-parameter cuts {v : g⁺(v) ≥ alpha and g⁻(v) ≤ beta}.
/// Requires alpha in (0,1] and beta in [-1,0).
LevelSoftSet level_soft_set(const BipolarFuzzySoftSet& g, const Rational& alpha,
                            const Rational& beta);

// ---------------------------------------------------------------------------
// The five equivalent characterisations. Every checker requires the
// underlying space to pass H1-H5; combo/scalarsum additionally require sld.

struct BfsHvsViolation {
    enum class Kind { difference, scalar };
    Kind kind{};
    std::size_t param = 0;
    bool positive_side = true;
    Elem y = 0, z = 0;  // difference uses y,z; scalar uses y
    Scalar b = 0;       // scalar only
};
std::string describe(const BipolarFuzzySoftSet& g, const BfsHvsViolation& w);

std::optional<BfsHvsViolation> bfs_hvs_violation(const BipolarFuzzySoftSet& g);
bool is_bfs_hvs_direct(const BipolarFuzzySoftSet& g);

struct Iff1Violation {
    enum class Part { sum, negation, scalar };
    Part part{};
    Scalar b = 0;  // scalar part only
    std::size_t param = 0;
    Elem x = 0;
    bool positive_side = true;
};
std::string describe(const BipolarFuzzySoftSet& g, const Iff1Violation& w);

std::optional<Iff1Violation> iff1_violation(const BipolarFuzzySoftSet& g);
bool is_bfs_hvs_iff1(const BipolarFuzzySoftSet& g);

struct LevelsViolation {
    std::size_t param = 0;
    Rational alpha;
    Rational beta;
    VectorSubset cut;
    ShsViolation inner;
};
std::string describe(const BipolarFuzzySoftSet& g, const LevelsViolation& w);

/// Tests every non-empty cut on the per-parameter grid of realised grades
/// (cuts are constant between consecutive realised values, so the grid is
/// sufficient; empty cuts are vacuously acceptable), plus the boundary cuts
/// with one side unconstrained (alpha or beta equal to 0), which the
/// equivalence with the direct definition needs when grades hit 0.
std::optional<LevelsViolation> levels_violation(const BipolarFuzzySoftSet& g);
bool is_bfs_hvs_levels(const BipolarFuzzySoftSet& g);

struct ComboViolation {
    std::size_t param = 0;
    Scalar a = 0, b = 0;
    Elem x = 0, y = 0;
    bool positive_side = true;
};
std::string describe(const BipolarFuzzySoftSet& g, const ComboViolation& w);

std::optional<ComboViolation> combo_violation(const BipolarFuzzySoftSet& g);
bool is_bfs_hvs_combo(const BipolarFuzzySoftSet& g);

struct ScalarSumViolation {
    Scalar b = 0, c = 0;
    std::size_t param = 0;
    Elem x = 0;
    bool positive_side = true;
};
std::string describe(const BipolarFuzzySoftSet& g, const ScalarSumViolation& w);

std::optional<ScalarSumViolation> scalarsum_violation(const BipolarFuzzySoftSet& g);
bool is_bfs_hvs_scalarsum(const BipolarFuzzySoftSet& g);

}  // namespace hvs
