#pragma once

#include <map>
#include <memory>
#include <string>

#include "hvs/bfs_set.hpp"
#include "hvs/errors.hpp"
#include "hvs/finite_field.hpp"
#include "hvs/hypervector_space.hpp"

namespace hvs::dsl {

/// Parse failure with a position into the original source (1-based).
struct ParseError : Error {
    ParseError(std::size_t line_, std::size_t column_, const std::string& message_,
               std::string token_);
    std::size_t line;
    std::size_t column;
    std::string message;
    std::string token;
};

/// A parsed `.hvs` file: named fields, spaces and bfs sets, with every
/// reference resolved and every structural invariant already enforced.
struct Document {
    struct SpaceEntry {
        std::string field_name;
        std::shared_ptr<const HyperVectorSpace> space;

        bool operator==(const SpaceEntry& other) const {
            return field_name == other.field_name && *space == *other.space;
        }
    };
    struct BfsEntry {
        std::string space_name;
        BipolarFuzzySoftSet bfs;

        bool operator==(const BfsEntry& other) const {
            return space_name == other.space_name && bfs == other.bfs;
        }
    };

    std::map<std::string, FiniteField> fields;
    std::map<std::string, SpaceEntry> spaces;
    std::map<std::string, BfsEntry> bfs_sets;

    bool operator==(const Document&) const = default;
};

/// Grammar (line oriented, `#` starts a comment):
///
///   field NAME            space NAME             bfs NAME
///     elements: a b         field: F               space: S
///     zero: a               carrier: x y           params: p q
///     one: b                zero: x                pos p: 1/2 0.3
///     add a: a b            add x: x y             neg p: -1 0
///     mul a: a a            B o X = {x,y}          ...
///     ...                   ...                  end
///   end                   end
///
/// Blocks end with `end`; references must be defined earlier in the file.
/// Grades are rationals: integers, p/q, or decimal literals (0.3 = 3/10).
Document parse_document(const std::string& text);

/// Canonical form: definitions sorted by name (fields, then spaces, then bfs
/// sets), fixed statement order, grades in lowest terms. Byte-stable:
/// equal Documents serialize identically, and parse ∘ serialize is the
/// identity on Documents.
std::string serialize_document(const Document& doc);

}  // namespace hvs::dsl
