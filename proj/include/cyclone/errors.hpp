#pragma once

#include <stdexcept>
#include <string>

namespace cyclone {

/// Base of every error the engine throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CYCLONE_DEFINE_ERROR(Name)          \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    }

CYCLONE_DEFINE_ERROR(DimensionError);
CYCLONE_DEFINE_ERROR(InvalidSimplexError);
CYCLONE_DEFINE_ERROR(InvalidFaceError);
CYCLONE_DEFINE_ERROR(InvalidGapError);
CYCLONE_DEFINE_ERROR(InvalidCircuitError);
CYCLONE_DEFINE_ERROR(FlipPreconditionError);
CYCLONE_DEFINE_ERROR(IncompatibleVectorError);
// An internal invariant failed; always an implementation bug.
CYCLONE_DEFINE_ERROR(ConsistencyError);
CYCLONE_DEFINE_ERROR(CompletenessError);
CYCLONE_DEFINE_ERROR(CapacityError);
CYCLONE_DEFINE_ERROR(CheckpointFormatError);
CYCLONE_DEFINE_ERROR(ParseError);
CYCLONE_DEFINE_ERROR(StructureError);
CYCLONE_DEFINE_ERROR(InterruptedError);

#undef CYCLONE_DEFINE_ERROR

} // namespace cyclone
