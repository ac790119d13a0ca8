#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hvs/finite_field.hpp"
#include "hvs/types.hpp"

namespace hvs {

/// A finite hypervector space: an abelian group of vectors, a finite field of
/// scalars, and an external hyperoperation mapping (scalar, vector) to a
/// non-empty subset of the carrier.
///
/// make() enforces the structural invariants (total tables, abelian group,
/// non-empty sorted cells); whether the five hyperspace axioms hold is a
/// separate question answered by check_axioms().
struct HyperVectorSpace {
    std::vector<std::string> labels;              // vector ids, index = Elem
    std::vector<std::vector<Elem>> add;           // add[x][y]
    Elem zero = 0;
    FiniteField field;
    // hyperop[b][x] = sorted non-empty subset of the carrier
    std::vector<std::vector<std::vector<Elem>>> hyperop;
    std::vector<Elem> neg;                        // derived from the add table

    static HyperVectorSpace make(std::vector<std::string> labels,
                                 std::vector<std::vector<Elem>> add, Elem zero,
                                 FiniteField field,
                                 std::vector<std::vector<std::vector<Elem>>> hyperop);

    [[nodiscard]] std::size_t size() const { return labels.size(); }
    [[nodiscard]] Elem sum(Elem x, Elem y) const { return add[x][y]; }
    [[nodiscard]] Elem diff(Elem x, Elem y) const { return add[x][neg[y]]; }
    [[nodiscard]] const std::vector<Elem>& cell(Scalar b, Elem x) const {
        return hyperop[b][x];
    }

    [[nodiscard]] VectorSubset full_carrier() const;
    [[nodiscard]] std::string label_set(const VectorSubset& s) const;  // "{0,2}"

    bool operator==(const HyperVectorSpace&) const = default;
};

/// One concrete instance refuting an axiom or one of the derived flags.
struct AxiomWitness {
    enum class Law { h1, h2, h3, h4, h5, srd, sld, invertible };
    Law law{};
    std::vector<Scalar> scalars;
    std::vector<Elem> elems;
};

/// Re-evaluates the law at the witness instance; true when the instance
/// really violates it.
bool witness_refutes(const HyperVectorSpace& v, const AxiomWitness& w);

std::string describe(const HyperVectorSpace& v, const AxiomWitness& w);

struct AxiomReport {
    struct Entry {
        bool pass = false;
        std::optional<AxiomWitness> witness;  // set when pass is false
    };
    Entry h1, h2, h3, h4, h5;
    bool srd = false;
    bool sld = false;
    bool invertible = false;
    std::optional<AxiomWitness> srd_witness, sld_witness, invertible_witness;

    [[nodiscard]] bool all_pass() const {
        return h1.pass && h2.pass && h3.pass && h4.pass && h5.pass;
    }
};

/// Exhaustively decides H1-H5 plus the srd / sld / invertible flags.
/// H1, H2 are the weak (inclusion) axioms; srd / sld flag equality.
/// H3 holds when (bc)∘y ⊆ ⋃_{p∈c∘y} b∘p; H4 is the three-way set equality
/// b∘(−y) = (−b)∘y = −(b∘y). Witnesses are first-found in table order.
AxiomReport check_axioms(const HyperVectorSpace& v);

/// Throws HypothesisError unless every axiom passes.
void require_hvs(const HyperVectorSpace& v);

struct ShsViolation {
    enum class Kind { empty, difference, scalar };
    Kind kind{};
    Elem y = 0, z = 0;   // difference: y - z escapes; scalar: z ∈ b∘y escapes
    Scalar b = 0;
};

std::string describe(const HyperVectorSpace& v, const ShsViolation& w);

/// S must be a subset of the carrier (sorted, in range).
std::optional<ShsViolation> subhyperspace_violation(const HyperVectorSpace& v,
                                                    const VectorSubset& s);
bool is_subhyperspace(const HyperVectorSpace& v, const VectorSubset& s);

/// Smallest subhyperspace containing S, computed as a worklist fixed point
/// closing under pairwise sums, negation and every b∘x. S must be non-empty.
VectorSubset span(const HyperVectorSpace& v, const VectorSubset& s);

/// All subhyperspaces, sorted by size then lexicographically.
/// Guarded: throws CapacityError when the carrier exceeds 16 elements.
std::vector<VectorSubset> enumerate_subhyperspaces(const HyperVectorSpace& v);

/// The vector space K over itself with the singleton hyperoperation
/// b∘x = {b·x}; always srd, sld and invertible.
HyperVectorSpace classical_hvs_from_field(const FiniteField& k);

}  // namespace hvs
