#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

enum class Errc {
    IllegalMove,
    NoLegalMoves,
    BadStart,
    UnfinishedGame,
    SupportViolation,
    SupportMismatch,
    DegenerateData,
    NonPositivePawn,
    Syntax,
    IllegalPosition,
    VariantMismatch,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace vlab
