#ifndef KNOTFORGE_ERRORS_HPP
#define KNOTFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// rank-k gcd with k > 1, and anything else outside the supported ring
struct UnsupportedRank : Error {
    using Error::Error;
};

struct DegeneratePresentation : Error {
    using Error::Error;
};

struct InvalidRepresentation : Error {
    using Error::Error;
};

// coset enumeration ran out of its coset budget; says nothing about the index
struct IncompleteEnumeration : Error {
    using Error::Error;
};

struct DivergentSeries : Error {
    using Error::Error;
};

struct ComputationTooLarge : Error {
    using Error::Error;
};

} // namespace knotforge

#endif
