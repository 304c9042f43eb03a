#pragma once

#include <stdexcept>
#include <string>

namespace vertx {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- mask / geometry ---------------------------------------------------------

struct GridMismatch : Error {
    using Error::Error;
};
struct RleLengthMismatch : Error {
    using Error::Error;
};
struct RleMalformed : Error {
    using Error::Error;
};
struct EmptyMask : Error {
    using Error::Error;
};
struct NoSeeds : Error {
    using Error::Error;
};
struct SeedOutsideRegion : Error {
    using Error::Error;
};

// -- ensemble / phantom ------------------------------------------------------

struct ConfigInvalid : Error {
    using Error::Error;
};

// -- labeling ----------------------------------------------------------------

struct EmptyInput : Error {
    using Error::Error;
};
struct NoReferenceFound : Error {
    using Error::Error;
};
struct AmbiguousRegion : Error {
    using Error::Error;
};
struct SequenceOverflow : Error {
    using Error::Error;
};
struct InvalidReferenceIndex : Error {
    using Error::Error;
};

// -- eval --------------------------------------------------------------------

struct DuplicateLabel : Error {
    using Error::Error;
};

// -- io ----------------------------------------------------------------------

/// Schema violation or unparsable content; the message names the offending field.
struct ParseError : Error {
    using Error::Error;
};
/// Filesystem-level failure (open/read/write).
struct IoError : Error {
    using Error::Error;
};

}  // namespace vertx
