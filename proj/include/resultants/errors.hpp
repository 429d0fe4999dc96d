#pragma once

#include <stdexcept>
#include <string>

namespace resultants {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HomogeneityError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct DegreeError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct AntisymmetryError : Error { using Error::Error; };
struct EulerError : Error { using Error::Error; };
struct SquarenessError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// No admissible choice of complementary subsets gives nonzero denominator minors.
struct DegenerateError : Error { using Error::Error; };

}  // namespace resultants
