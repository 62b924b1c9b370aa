#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace credal {

// Base for every error raised by the library. Callers that only care
// about "the input was semantically wrong" can catch this.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A gamble or configuration does not live on the scope an operation needs.
class ScopeError : public Error
{
public:
    using Error::Error;
};

class DimensionError : public Error
{
public:
    using Error::Error;
};

class UnknownNodeError : public Error
{
public:
    using Error::Error;
};

// The zero gamble was passed where a nonzero gamble is required.
class ZeroGambleError : public Error
{
public:
    using Error::Error;
};

class IncoherentModelError : public Error
{
public:
    using Error::Error;
};

class CapExceededError : public Error
{
public:
    CapExceededError(std::size_t count, std::size_t cap);

    std::size_t count() const { return count_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t count_;
    std::size_t cap_;
};

class SizeGuardError : public Error
{
public:
    using Error::Error;
};

// Malformed textual input (rationals, JSON documents).
class ParseError : public Error
{
public:
    using Error::Error;
};

}  // namespace credal
