#ifndef NPV_ERRORS_HPP
#define NPV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace npv {

// Machine-readable error codes, doubling as CLI exit codes.
enum class ErrorCode {
    ParseError = 2,
    ForeignPole = 3,
    ConfigMismatch = 4,
    ReducibleModulus = 5,
    UnexpectedGroup = 6,
    InfiniteGroup = 7,
    SpecMismatch = 8,
    DivisionByZero = 9,
    BadIndex = 10,
    PoleEvaluation = 11,
    DegenerateInput = 12,
    BadParameters = 13,
    NotApplicable = 14,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

#define NPV_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what)                    \
            : Error(ErrorCode::Name, what) {}                     \
    }

NPV_DEFINE_ERROR(ForeignPole);
NPV_DEFINE_ERROR(ConfigMismatch);
NPV_DEFINE_ERROR(ReducibleModulus);
NPV_DEFINE_ERROR(UnexpectedGroup);
NPV_DEFINE_ERROR(InfiniteGroup);
NPV_DEFINE_ERROR(SpecMismatch);
NPV_DEFINE_ERROR(DivisionByZero);
NPV_DEFINE_ERROR(BadIndex);
NPV_DEFINE_ERROR(PoleEvaluation);
NPV_DEFINE_ERROR(DegenerateInput);
NPV_DEFINE_ERROR(BadParameters);
NPV_DEFINE_ERROR(NotApplicable);

#undef NPV_DEFINE_ERROR

// Carries the offset of the offending token in the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorCode::ParseError, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace npv

#endif
