#pragma once

#include <stdexcept>
#include <string>

namespace hermix {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HERMIX_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

HERMIX_DEFINE_ERROR(InvalidParameter);
HERMIX_DEFINE_ERROR(MomentNotFinite);
HERMIX_DEFINE_ERROR(NonPolynomialParameter);
HERMIX_DEFINE_ERROR(EmptySample);
HERMIX_DEFINE_ERROR(InsufficientMoments);
HERMIX_DEFINE_ERROR(RingMismatch);
HERMIX_DEFINE_ERROR(NotZeroDimensional);
HERMIX_DEFINE_ERROR(NotMonic);
HERMIX_DEFINE_ERROR(NotUnivariate);
HERMIX_DEFINE_ERROR(NoConvergence);
HERMIX_DEFINE_ERROR(SeparationFailure);
HERMIX_DEFINE_ERROR(BasisMismatch);
HERMIX_DEFINE_ERROR(Underdetermined);
HERMIX_DEFINE_ERROR(RankDeficient);
HERMIX_DEFINE_ERROR(InfeasibleWeights);
HERMIX_DEFINE_ERROR(UnknownFamily);
HERMIX_DEFINE_ERROR(IoError);
HERMIX_DEFINE_ERROR(IrrationalScale);

#undef HERMIX_DEFINE_ERROR

// Parse errors carry the character position (0-based) in the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Malformed input-file line; carries the 1-based line number.
class MalformedLine : public Error {
public:
    MalformedLine(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace hermix
