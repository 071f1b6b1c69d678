#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vogel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two objects were combined although they live in different coordinate bases.
class BasisMismatch : public Error {
public:
    using Error::Error;
};

/// Equal points, proportional lines, zero triples and similar degenerate inputs.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// A quantum formula was evaluated where one of its factors vanishes.
class SingularPoint : public Error {
public:
    SingularPoint(std::string what, bool in_numerator, std::size_t factor)
        : Error(std::move(what)), in_numerator_(in_numerator), factor_(factor) {}
    bool in_numerator() const noexcept { return in_numerator_; }
    std::size_t factor() const noexcept { return factor_; }

private:
    bool in_numerator_;
    std::size_t factor_;
};

/// Multiplier vectors whose product is not one, or of the wrong length.
class InvalidMultiplier : public Error {
public:
    using Error::Error;
};

/// Formulas with different quantum flags or bases were multiplied.
class FormulaMismatch : public Error {
public:
    using Error::Error;
};

/// Some factor is identically zero on the line a formula was restricted to.
class VanishingFactor : public Error {
public:
    VanishingFactor(std::vector<std::size_t> num, std::vector<std::size_t> den);
    const std::vector<std::size_t>& numerator() const noexcept { return num_; }
    const std::vector<std::size_t>& denominator() const noexcept { return den_; }

private:
    std::vector<std::size_t> num_, den_;
};

/// A solution family for which no instantiation keeps every factor nonzero.
class DegenerateFamily : public Error {
public:
    using Error::Error;
};

/// The symbolic verdict of an identity check disagreed with numeric sampling.
class InternalConsistency : public Error {
public:
    using Error::Error;
};

/// Configuration-level failures: malformed colorings, tables out of range.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// The factor lines of a formula do not produce k triple points on every black line.
class NotAQPicture : public Error {
public:
    NotAQPicture(std::string what, std::vector<std::size_t> deficient)
        : Error(std::move(what)), deficient_(std::move(deficient)) {}
    const std::vector<std::size_t>& deficient_lines() const noexcept { return deficient_; }

private:
    std::vector<std::size_t> deficient_;
};

/// Malformed serialized input; `where` is a JSON-pointer-like location.
class ParseError : public Error {
public:
    ParseError(const std::string& where, const std::string& what)
        : Error(where + ": " + what), where_(where) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace vogel
