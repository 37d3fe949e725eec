#pragma once

#include <stdexcept>
#include <string>

namespace iashare {

enum class ErrorKind {
    MalformedRow,
    DuplicateKey,
    UnknownProvince,
    UnknownDivision,
    NegativeCount,
    FactorOutOfRange,
    DuplicateDivision,
    MissingFactor,
    EmptySelection,
    MissingSeries,
    TerritoryMismatch,
    UndefinedShare,
    DegenerateRange,
    GeometryMismatch,
    InvalidArgument,
    Io,
};

/// Library-wide exception: a kind for programmatic dispatch plus a
/// human-readable message (with file/line context where the input has one).
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

} // namespace iashare
