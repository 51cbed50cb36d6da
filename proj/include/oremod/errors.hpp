#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oremod {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct EvalAtPole : Error {
    explicit EvalAtPole(const std::string& msg = "evaluation at a pole") : Error(msg) {}
};

struct GeneratorMismatch : Error {
    explicit GeneratorMismatch(const std::string& msg = "operands use different generators")
      : Error(msg) {}
};

struct NonUnitLeadingCoeff : Error {
    explicit NonUnitLeadingCoeff(const std::string& msg =
                                     "divisor leading coefficient is not a unit of C[t,t^-1]")
      : Error(msg) {}
};

struct NotInSubmodule : Error {
    explicit NotInSubmodule(const std::string& msg = "vector lies outside the submodule")
      : Error(msg) {}
};

struct NotEigenvector : Error {
    explicit NotEigenvector(const std::string& msg = "vector is not an eigenvector") : Error(msg) {}
};

struct TwistDegenerate : Error {
    explicit TwistDegenerate(const std::string& msg = "twist satisfies b(b-1)=0") : Error(msg) {}
};

struct ConstraintViolated : Error {
    std::size_t pole_index; // 1-based index of the failing pole
    explicit ConstraintViolated(std::size_t index, const std::string& msg)
      : Error(msg), pole_index(index) {}
};

struct DuplicatePoles : Error {
    explicit DuplicatePoles(const std::string& msg = "poles must be pairwise distinct")
      : Error(msg) {}
};

struct ZeroPole : Error {
    explicit ZeroPole(const std::string& msg = "poles must be nonzero") : Error(msg) {}
};

struct ConstantPolynomial : Error {
    explicit ConstantPolynomial(const std::string& msg = "polynomial must be nonconstant")
      : Error(msg) {}
};

struct BudgetExceeded : Error {
    std::uint64_t candidates_tried;
    explicit BudgetExceeded(std::uint64_t tried, const std::string& msg)
      : Error(msg), candidates_tried(tried) {}
};

struct SyntaxError : Error {
    std::size_t position; // 0-based offset into the source text
    SyntaxError(std::size_t pos, const std::string& msg)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct LoweringError : Error {
    explicit LoweringError(const std::string& msg) : Error(msg) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

struct InvalidDescriptor : Error {
    explicit InvalidDescriptor(const std::string& msg) : Error(msg) {}
};

} // namespace oremod
