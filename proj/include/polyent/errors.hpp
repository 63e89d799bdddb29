#ifndef POLYENT_ERRORS_HPP
#define POLYENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyent {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeProbability : Error {
    using Error::Error;
};
struct NotNormalized : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct BadAxis : Error {
    using Error::Error;
};
struct NonPositiveExponent : Error {
    using Error::Error;
};
struct BadBase : Error {
    using Error::Error;
};
struct UnsupportedArity : Error {
    using Error::Error;
};
struct ArityTooSmall : Error {
    using Error::Error;
};
struct QEqualsOne : Error {
    using Error::Error;
};
struct WrongArity : Error {
    using Error::Error;
};

}  // namespace polyent

#endif  // POLYENT_ERRORS_HPP
