#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace weylscope {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Weyl group (or face enumeration) larger than the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class FanAxiomViolation : public Error {
public:
    FanAxiomViolation(const std::string& what, std::vector<std::string> witness)
        : Error(what), witness_(std::move(witness)) {}
    const std::vector<std::string>& witness() const { return witness_; }

private:
    std::vector<std::string> witness_;
};

// A functional changes sign on a stratum cone: no limit along interior rays.
class Indeterminate : public Error {
public:
    using Error::Error;
};

class ChartMismatch : public Error {
public:
    using Error::Error;
};

class TypeOrderViolation : public Error {
public:
    using Error::Error;
};

}  // namespace weylscope
