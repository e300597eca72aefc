#pragma once

#include <stdexcept>
#include <string>

namespace confcohom {

/// Failure categories; the numeric values are the CLI exit codes.
enum class ErrorKind {
    hypothesis_violation = 2,
    parse_error = 3,
    consistency = 4,
    cost_cap = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// A theorem-gated computation was requested on data lacking the required flag.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(const std::string& flag, const std::string& what)
        : Error(ErrorKind::hypothesis_violation, what), flag_(flag) {}
    const std::string& flag() const noexcept { return flag_; }

private:
    std::string flag_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::parse_error, what) {}
};

/// An exact identity that must hold (divisibility, sign, cross-check) did not.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(ErrorKind::consistency, what) {}
};

class CostCapExceeded : public Error {
public:
    explicit CostCapExceeded(const std::string& what) : Error(ErrorKind::cost_cap, what) {}
};

}  // namespace confcohom
