#pragma once

#include <stdexcept>
#include <string>

namespace arithjet {

// Raised when an exact division fails. Since every division in the library is
// backed by an integrality theorem or an explicit precondition, this either
// signals an implementation bug or surfaces a genuine non-integral input.
struct DivisionNotExact : std::runtime_error {
    explicit DivisionNotExact(const std::string& what) : std::runtime_error("DivisionNotExact: " + what) {}
};

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error("BoundExceeded: " + what) {}
};

struct NotAFrobeniusLift : std::runtime_error {
    explicit NotAFrobeniusLift(const std::string& what) : std::runtime_error("NotAFrobeniusLift: " + what) {}
};

struct AxiomViolation : std::runtime_error {
    explicit AxiomViolation(const std::string& what) : std::runtime_error("AxiomViolation: " + what) {}
};

struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error("NotInvertible: " + what) {}
};

struct NotAUnit : std::runtime_error {
    explicit NotAUnit(const std::string& what) : std::runtime_error("NotAUnit: " + what) {}
};

struct NotCoprime : std::runtime_error {
    explicit NotCoprime(const std::string& what) : std::runtime_error("NotCoprime: " + what) {}
};

struct BadReduction : std::runtime_error {
    explicit BadReduction(const std::string& what) : std::runtime_error("BadReduction: " + what) {}
};

struct TruncationUnderflow : std::runtime_error {
    explicit TruncationUnderflow(const std::string& what) : std::runtime_error("TruncationUnderflow: " + what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error("RangeError: " + what) {}
};

struct ZeroElement : std::runtime_error {
    explicit ZeroElement(const std::string& what) : std::runtime_error("ZeroElement: " + what) {}
};

struct UnsupportedBase : std::runtime_error {
    explicit UnsupportedBase(const std::string& what) : std::runtime_error("UnsupportedBase: " + what) {}
};

struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error("PrecisionExhausted: " + what) {}
};

}  // namespace arithjet
