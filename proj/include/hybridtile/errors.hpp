#pragma once

#include <stdexcept>
#include <string>

namespace hybridtile {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
    using Error::Error;
};
struct BoundaryIntersection : Error {
    using Error::Error;
};
struct ResourceLimit : Error {
    using Error::Error;
};
struct NotBipartite : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct BadLocus : Error {
    using Error::Error;
};
struct PatternMismatch : Error {
    using Error::Error;
};
struct PreconditionFailed : Error {
    using Error::Error;
};
struct InvalidLabels : Error {
    using Error::Error;
};
struct PrecisionLoss : Error {
    using Error::Error;
};

}  // namespace hybridtile
