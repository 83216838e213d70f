#ifndef LYZVAL_ERRORS_HPP
#define LYZVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lyzval {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input has fewer affine dimensions than the operation requires.
struct DegeneratePolytope : Error {
    using Error::Error;
};

// A facet hyperplane passes through the origin where a nonzero offset is required.
struct ZeroOffsetFacet : Error {
    using Error::Error;
};

// The origin is not an interior point (polar duality, classical LYZ matrix).
struct OriginNotInterior : Error {
    using Error::Error;
};

// The origin is not contained in the polytope at all.
struct OriginOutside : Error {
    using Error::Error;
};

// A linear map that must be invertible is singular (or numerically so).
struct SingularMatrix : Error {
    using Error::Error;
};

// Cut parameter outside the open interval (0, 1).
struct LambdaOutOfRange : Error {
    using Error::Error;
};

// Operand dimensions do not match the operation's contract.
struct WrongDimension : Error {
    using Error::Error;
};

// Mixed-dimension data inside one structured input (e.g. ragged vertex lists).
struct DimensionMismatch : Error {
    using Error::Error;
};

// A simplex handed to the antisymmetric valuation lacks the origin vertex.
struct MissingOriginVertex : Error {
    using Error::Error;
};

// Random generation could not satisfy the requested constraints within budget.
struct GenerationExhausted : Error {
    using Error::Error;
};

// Check name not present in the harness registry.
struct UnknownCheckName : Error {
    using Error::Error;
};

// Malformed input file or string.
struct ParseError : Error {
    using Error::Error;
};

// A user-supplied witness callable failed the sampled additivity test.
struct InvalidWitness : Error {
    using Error::Error;
};

} // namespace lyzval

#endif
