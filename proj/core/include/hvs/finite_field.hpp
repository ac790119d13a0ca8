#pragma once

#include <string>
#include <vector>

#include "hvs/types.hpp"

namespace hvs {

/// A finite field given by explicit Cayley tables. Instances built through
/// make() (or the parser) satisfy the field axioms; make() verifies them by
/// exhaustion and throws StructuralError otherwise.
struct FiniteField {
    std::vector<std::string> labels;          // element ids, index = Scalar
    std::vector<std::vector<Scalar>> add;     // add[a][b]
    std::vector<std::vector<Scalar>> mul;     // mul[a][b]
    Scalar zero = 0;
    Scalar one = 0;

    static FiniteField make(std::vector<std::string> labels,
                            std::vector<std::vector<Scalar>> add,
                            std::vector<std::vector<Scalar>> mul,
                            Scalar zero, Scalar one);

    [[nodiscard]] std::size_t size() const { return labels.size(); }

    /// Additive inverse, looked up in the add table.
    [[nodiscard]] Scalar neg(Scalar a) const;
    /// Multiplicative inverse of a non-zero element.
    [[nodiscard]] Scalar inverse(Scalar a) const;

    bool operator==(const FiniteField&) const = default;
};

/// Checks every field axiom over the tables; throws StructuralError naming
/// the first violated law or malformed cell.
void validate_field(const FiniteField& k);

/// Z_p with labels "0".."p-1". p must be prime.
FiniteField prime_field(unsigned p);

}  // namespace hvs
