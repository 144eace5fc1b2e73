#pragma once

#include <stdexcept>
#include <string>

namespace thetalab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : Error {
    using Error::Error;
};
struct UnsupportedFamily : Error {
    using Error::Error;
};
struct UnsupportedIrrep : Error {
    using Error::Error;
};
struct ArityMismatch : Error {
    using Error::Error;
};
struct NotInvariant : Error {
    using Error::Error;
};
struct NoSolution : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct PreconditionFailed : Error {
    using Error::Error;
};
struct DegreeOverflow : Error {
    using Error::Error;
};
struct WindowTooSmall : Error {
    using Error::Error;
};
struct NonUniqueMinimalVector : Error {
    using Error::Error;
};
struct NotNormal : Error {
    using Error::Error;
};
struct NotCommuting : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};

}  // namespace thetalab
