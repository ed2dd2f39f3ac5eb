#pragma once

#include <stdexcept>
#include <string>

namespace rdpforge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Element does not have the shape the descriptor requires. The message names
// the offending path, e.g. "root.tail[1]".
class ShapeError : public Error {
public:
    ShapeError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// Operation is not available for this descriptor.
class CapabilityError : public Error {
public:
    using Error::Error;
};

// Caller violated a documented precondition.
class InputError : public Error {
public:
    using Error::Error;
};

// An exhaustive scan proved that no refinement table exists.
class NoTableExists : public Error {
public:
    using Error::Error;
};

// A construction needed an intermediate element that the group does not provide.
class NoWitness : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace rdpforge
