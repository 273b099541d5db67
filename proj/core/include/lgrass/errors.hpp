#ifndef LGRASS_ERRORS_HPP
#define LGRASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lgrass {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NegativeValuation : Error {
    explicit NegativeValuation(const std::string& msg = "negative s-adic valuation") : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct NotFullRank : Error {
    explicit NotFullRank(const std::string& msg = "matrix does not have full column rank") : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error("index out of range: " + msg) {}
};

struct BadProfile : Error {
    explicit BadProfile(const std::string& msg) : Error("bad rank profile: " + msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg = "matrix is not invertible") : Error(msg) {}
};

struct UnitDeterminantRequired : Error {
    UnitDeterminantRequired() : Error("conjugating matrix must have determinant of valuation 0") {}
};

struct NotLinked : Error {
    explicit NotLinked(const std::string& msg = "subspace tuple is not linked") : Error(msg) {}
};

struct NotExact : Error {
    explicit NotExact(const std::string& msg = "subspace tuple is not an exact point") : Error(msg) {}
};

struct NotIsotropic : Error {
    explicit NotIsotropic(const std::string& msg = "subspace tuple is not isotropic") : Error(msg) {}
};

struct DecompositionFailed : Error {
    explicit DecompositionFailed(const std::string& msg) : Error("decomposition failed: " + msg) {}
};

struct GenerationExhausted : Error {
    explicit GenerationExhausted(const std::string& msg) : Error("generation exhausted: " + msg) {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& msg) : Error("invalid config: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace lgrass

#endif
