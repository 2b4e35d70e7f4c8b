#ifndef MICA_ERROR_HPP
#define MICA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mica {

// Typed mathematical error conditions. The CLI maps MathError to exit code 1
// and ParseError to exit code 2.
enum class ErrorCode {
    UnitIdeal,
    ZeroIdeal,
    VoidComplex,
    NotSquarefree,
    FullSimplex,
    FaceNotInComplex,
    IndexOutOfRange,
    NotRegularSequence,
    TheoremOutOfScope,
    NotFullSupported,
    NotPolymatroidal,
    WrongDimension,
    PreconditionNotACM,
    Overflow,
    InvalidArgument,
};

class MathError : public std::runtime_error {
public:
    MathError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw MathError(code, msg);
}

}  // namespace mica

#endif
