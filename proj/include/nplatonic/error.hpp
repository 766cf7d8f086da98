#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nplatonic {

enum class Errc {
    NotSimple,
    NotConnected,
    NotPlanar,
    AsymmetricInput,
    SyntaxError,
    TooLarge,
    BadPathLength,
    NotABlock,
    NotTwoConnected,
    ParamTooSmall,
    UnsupportedSolid,
    NotOnBoundary,
    WrongSpan,
    Disconnects,
    NotOnFace,
    AlreadyAdjacent,
    EmptyArc,
    NotOnCommonFace,
    Adjacent,
    BridgeCut,
    IncompatibleMarks,
    NotSimpleAfterGlue,
    NotBarrelStructured,
    TooSmall,
    WrongType,
    InvalidArgument,
};

std::string_view errc_name(Errc code);

// Every domain failure in the library is reported through this exception.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace nplatonic
