#ifndef VTXCALC_ERRORS_HPP
#define VTXCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vtx {

struct CalcError : std::runtime_error {
    explicit CalcError(const std::string& what) : std::runtime_error(what) {}
};

// evaluation at z = 0 (z is required invertible)
struct ZeroParameter : CalcError {
    ZeroParameter() : CalcError("substitution at z = 0") {}
};

// a coefficient of a series product would be an infinite sum
struct IllDefinedProduct : CalcError {
    explicit IllDefinedProduct(const std::string& w) : CalcError("ill-defined product: " + w) {}
};

// an exact result needs a graded component beyond the model cutoff
struct TruncationOverflow : CalcError {
    explicit TruncationOverflow(const std::string& w) : CalcError("truncation overflow: " + w) {}
};

// generated subspace escapes the representable support region
struct CutoffExceeded : CalcError {
    explicit CutoffExceeded(const std::string& w) : CalcError("cutoff exceeded: " + w) {}
};

// a loop element carries denominators outside the action's localization
struct WrongLocalization : CalcError {
    explicit WrongLocalization(const std::string& w) : CalcError("wrong localization: " + w) {}
};

struct UnknownProperty : CalcError {
    explicit UnknownProperty(const std::string& id) : CalcError("unknown property: " + id) {}
};

struct UnsupportedInstance : CalcError {
    explicit UnsupportedInstance(const std::string& w) : CalcError("unsupported instance: " + w) {}
};

struct UnsupportedSpectrum : CalcError {
    explicit UnsupportedSpectrum(const std::string& w) : CalcError("unsupported spectrum: " + w) {}
};

struct NotCommutative : CalcError {
    explicit NotCommutative(const std::string& w) : CalcError("not commutative: " + w) {}
};
struct NotAssociative : CalcError {
    explicit NotAssociative(const std::string& w) : CalcError("not associative: " + w) {}
};
struct NoUnit : CalcError {
    explicit NoUnit(const std::string& w) : CalcError("no unit: " + w) {}
};
struct NotAModule : CalcError {
    explicit NotAModule(const std::string& w) : CalcError("not a module: " + w) {}
};

struct NoFactorization : CalcError {
    explicit NoFactorization(const std::string& w) : CalcError("no factorization: " + w) {}
};
struct NonUniqueFactorization : CalcError {
    explicit NonUniqueFactorization(const std::string& w) : CalcError("non-unique factorization: " + w) {}
};

struct ParseError : CalcError {
    explicit ParseError(const std::string& w) : CalcError("parse error: " + w) {}
};

} // namespace vtx

#endif
