#pragma once

#include <stdexcept>
#include <string>

namespace starrees {

enum class ErrorKind {
    DivisionByZero,
    NotInvertible,
    IncompatibleOperands,
    UndefinedContent,
    Selection,
    Shape,
    Parameter,
    DegenerateInput,
    UnsupportedHeight,
    TrivialDependency,
    InternalConsistency,
    Resource,
    Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it to
// an exit status without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace starrees
