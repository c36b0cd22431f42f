#pragma once

#include <stdexcept>
#include <string>

namespace dpfl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInstance : public Error {
public:
    EmptyInstance() : Error("instance has no agents") {}
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

// Generator parameter outside its admissible domain (eps <= 0, d <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NonSymmetricParams : public DomainError {
public:
    NonSymmetricParams() : DomainError("generator requires symmetric peak offsets") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg
                         : msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace dpfl
