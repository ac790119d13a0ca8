#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hvs/bfs_set.hpp"

namespace hvs::oracle {

/// SplitMix64. Fixed here (rather than an implementation-defined standard
/// engine) so that seeded instance streams reproduce bit-for-bit across
/// platforms and reimplementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish index in [0, n) by modulo reduction (documented as part
    /// of the reproducibility contract; the tiny bias is irrelevant here).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

private:
    std::uint64_t state_;
};

/// The finite sets of admissible grade levels used by the randomized and
/// brute-force oracles.
struct GradeGrid {
    std::vector<Rational> pos_levels;  // ascending, within [0,1]
    std::vector<Rational> neg_levels;  // ascending, within [-1,0]

    static GradeGrid make(std::vector<Rational> pos_levels,
                          std::vector<Rational> neg_levels);
};

/// Deterministic function of (space, params, grid, seed): one SplitMix64
/// stream seeded with `seed`, drawing parameters in order, carrier elements
/// in order, positive level then negative level.
BipolarFuzzySoftSet random_bfs(std::shared_ptr<const HyperVectorSpace> space,
                               std::vector<std::string> params, const GradeGrid& grid,
                               std::uint64_t seed);

/// Exhaustive reference for generate_bfs_hvs: enumerates every grid-valued
/// bfs set over f's parameters, keeps those that are bfs-hvs and contain f,
/// and returns the ⊑-minimum. Guarded to at most `max_candidates`
/// (default 2^21) enumerated candidates.
BipolarFuzzySoftSet brute_force_min_bfs_hvs(const BipolarFuzzySoftSet& f,
                                            const GradeGrid& grid,
                                            std::uint64_t max_candidates = 1u << 21);

struct SuiteReport {
    struct Check {
        std::uint64_t evaluated = 0;
        std::uint64_t held = 0;

        bool operator==(const Check&) const = default;
    };
    struct Anomaly {
        std::uint64_t instance;
        std::string check;
        std::string detail;

        bool operator==(const Anomaly&) const = default;
    };

    std::uint64_t instances = 0;
    bool sld = false;
    bool invertible = false;
    bool srd = false;
    std::map<std::string, Check> checks;
    std::vector<Anomaly> disagreements;
    std::vector<std::uint64_t> construction_failures;

    [[nodiscard]] std::uint64_t disagreement_count() const {
        return disagreements.size();
    }

    bool operator==(const SuiteReport&) const = default;
};

/// Stable JSON rendering (insertion-ordered keys, no whitespace variance).
std::string to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

/// Runs the whole theorem battery over n seeded random bfs sets:
///  - agreement of the direct / iff1 / levels checkers (plus combo and
///    scalarsum when the space is sld); any disagreement is recorded;
///  - the sum and scalar monotonicity laws on every instance pair
///    (lemma_sum_lower_bound, lemma_one_scalar);
///  - on invertible spaces, the scalar lower bound for bfs-hvs instances
///    (lemma_scalar_growth);
///  - on invertible srd spaces, scalar distributivity over sums for
///    floor(n/4) generated bfs-hvs pairs (prop_distributivity).
/// Instance i draws G from seed+2i and H from seed+2i+1; the pair stream
/// continues at seed+2n. Stuck generate constructions are recorded, never
/// repaired.
SuiteReport equivalence_suite(const std::shared_ptr<const HyperVectorSpace>& space,
                              std::uint64_t n, std::uint64_t seed,
                              const GradeGrid& grid);

}  // namespace hvs::oracle
