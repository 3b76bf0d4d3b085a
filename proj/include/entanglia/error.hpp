#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entanglia {

enum class ErrorKind {
    MissingDims,
    BadSubset,
    BadDims,
    NotHermitian,
    NotPSD,
    NotDensity,
    ComplexRoots,
    TraceMismatch,
    BadDistribution,
    NotMajorized,
    BadResolution,
    BadSplit,
    BadParam,
    BadBloch,
    TooLarge,
    RankMismatch,
    NotIncomparable3x3,
    NoPlanFound,
    EmptyRange,
    Degenerate,
    OddN,
    BadLabel,
    BadSecret,
    BadParty,
    BadFormat,
};

inline std::string_view kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::MissingDims: return "MissingDims";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::BadDims: return "BadDims";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotDensity: return "NotDensity";
    case ErrorKind::ComplexRoots: return "ComplexRoots";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
    case ErrorKind::BadDistribution: return "BadDistribution";
    case ErrorKind::NotMajorized: return "NotMajorized";
    case ErrorKind::BadResolution: return "BadResolution";
    case ErrorKind::BadSplit: return "BadSplit";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::BadBloch: return "BadBloch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotIncomparable3x3: return "NotIncomparable3x3";
    case ErrorKind::NoPlanFound: return "NoPlanFound";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::OddN: return "OddN";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::BadSecret: return "BadSecret";
    case ErrorKind::BadParty: return "BadParty";
    case ErrorKind::BadFormat: return "BadFormat";
    }
    return "Unknown";
}

// Every precondition failure in the library is one of these.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace entanglia
