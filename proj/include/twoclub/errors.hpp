#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twoclub {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

class InvalidEdge : public Error {
public:
    using Error::Error;
};

class EmptyGraph : public Error {
public:
    using Error::Error;
};

class NotAClique : public Error {
public:
    using Error::Error;
};

class InvalidK : public Error {
public:
    using Error::Error;
};

/// Raised when an exhaustive routine is asked to run past its size guard.
class TooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace twoclub
