#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfact {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MixedFields : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class MixedQuivers : public Error {
public:
    using Error::Error;
};

class InvalidQuiver : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

class UnknownArrow : public Error {
public:
    using Error::Error;
};

class UnknownGenerator : public Error {
public:
    using Error::Error;
};

class InvalidDescriptor : public Error {
public:
    using Error::Error;
};

class InvalidAction : public Error {
public:
    using Error::Error;
};

class RelatorsNotRespected : public Error {
public:
    using Error::Error;
};

class HypothesesNotMet : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

/// Thrown when rewriting would produce an x-power above the configured cap.
class XPowerLimit : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Problem file does not match the schema. `pointer()` is an RFC 6901 JSON pointer.
class SchemaError : public Error {
public:
    SchemaError(const std::string& pointer, const std::string& message)
        : Error(pointer + ": " + message), pointer_(pointer) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// A name in the problem file refers to an undeclared vertex, arrow or generator.
class ResolutionError : public Error {
public:
    ResolutionError(const std::string& pointer, const std::string& message)
        : Error(pointer + ": " + message), pointer_(pointer) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

}  // namespace hopfact
