#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// Every failure the library can raise carries a stable machine-readable kind
// string next to the human-readable message.  The CLI maps any Error to exit
// code 1; "refuted" verdicts are not errors and are reported separately.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg) {
    throw Error(kind, msg);
}

namespace err {
inline constexpr const char* DivisionByZero = "DivisionByZero";
inline constexpr const char* SizeMismatch = "SizeMismatch";
inline constexpr const char* ContextMismatch = "ContextMismatch";
inline constexpr const char* NotSymmetric = "NotSymmetric";
inline constexpr const char* SingularBasis = "SingularBasis";
inline constexpr const char* NonPolynomialQuotient = "NonPolynomialQuotient";
inline constexpr const char* NegativeMultiplicity = "NegativeMultiplicity";
inline constexpr const char* BadHook = "BadHook";
inline constexpr const char* BadRow = "BadRow";
inline constexpr const char* BadPartition = "BadPartition";
inline constexpr const char* OutOfRange = "OutOfRange";
inline constexpr const char* NotComparable = "NotComparable";
inline constexpr const char* NegativeExponent = "NegativeExponent";
inline constexpr const char* IllFormedAlphabet = "IllFormedAlphabet";
inline constexpr const char* NotSnStable = "NotSnStable";
inline constexpr const char* NotInteger = "NotInteger";
inline constexpr const char* ReconstructionAmbiguous = "ReconstructionAmbiguous";
inline constexpr const char* NegativeRemainder = "NegativeRemainder";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* CacheError = "CacheError";
inline constexpr const char* Usage = "Usage";
} // namespace err

} // namespace hh
