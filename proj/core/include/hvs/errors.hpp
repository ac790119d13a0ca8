#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hvs {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed structure data: missing cell, id out of range, broken group table.
struct StructuralError : Error {
    using Error::Error;
};

/// Two values that must share an underlying space (or field) do not.
struct MismatchError : Error {
    using Error::Error;
};

/// Argument outside its admissible range (grades, thresholds, rationals).
struct DomainError : Error {
    using Error::Error;
};

/// Input too large for an exhaustive operation's documented guard.
struct CapacityError : Error {
    using Error::Error;
};

/// A theorem hypothesis or operation precondition does not hold, so the
/// operation refuses to certify anything.
struct HypothesisError : Error {
    using Error::Error;
};

/// generate_bfs_hvs could not extend its chain: some U_i is empty while the
/// chain has not reached the full carrier.
struct ConstructionStuckError : Error {
    ConstructionStuckError(std::size_t step_, std::string msg)
        : Error(std::move(msg)), step(step_) {}
    std::size_t step;
};

}  // namespace hvs
