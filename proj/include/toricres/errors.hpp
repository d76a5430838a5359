#pragma once

#include <stdexcept>
#include <string>

namespace toricres {

enum class ErrorKind {
    InvalidInput,
    InvalidCenter,
    InvalidChart,
    SharedSupport,
    ZeroBinomial,
    MonomialGenerator,
    TorsionError,
    EmptyDerivativeSet,
    NotAdmissible,
    InvalidOrder,
    NoXInitial,
    NotPermissible,
    IncomparableMaxima,
    NonTermination,
    Overflow,
};

inline const char* error_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidCenter: return "InvalidCenter";
    case ErrorKind::InvalidChart: return "InvalidChart";
    case ErrorKind::SharedSupport: return "SharedSupport";
    case ErrorKind::ZeroBinomial: return "ZeroBinomial";
    case ErrorKind::MonomialGenerator: return "MonomialGenerator";
    case ErrorKind::TorsionError: return "TorsionError";
    case ErrorKind::EmptyDerivativeSet: return "EmptyDerivativeSet";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::NoXInitial: return "NoXInitial";
    case ErrorKind::NotPermissible: return "NotPermissible";
    case ErrorKind::IncomparableMaxima: return "IncomparableMaxima";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace toricres
