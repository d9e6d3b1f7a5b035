#ifndef BSYS_ERRORS_HPP
#define BSYS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsys {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands built over different operator rings.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

// Module operands of different rank, or a position index out of range.
class RankMismatchError : public Error {
public:
    using Error::Error;
};

// A target/controller module outside the admissible interval.
class InadmissibleError : public Error {
public:
    using Error::Error;
};

// Trajectory-level checks are defined for shift rings only.
class OracleUnavailableError : public Error {
public:
    using Error::Error;
};

struct SourcePos {
    int line = 0;  // 1-based
    int col = 0;   // 1-based
};

class ParseError : public Error {
public:
    ParseError(SourcePos pos, const std::string& what)
        : Error("line " + std::to_string(pos.line) + ", col " + std::to_string(pos.col) +
                ": " + what),
          pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

}  // namespace bsys

#endif
