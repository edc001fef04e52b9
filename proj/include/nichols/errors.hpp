#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("zero denominator") {}
};

class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& point)
        : Error("rational function has a pole at q = " + point) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

class ZeroEntry : public Error {
public:
    ZeroEntry(int i, int j)
        : Error("braiding entry q_" + std::to_string(i) + std::to_string(j) + " is zero") {}
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name) : Error("unknown name '" + name + "'") {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class NoSolution : public Error {
public:
    NoSolution() : Error("linear system has no solution") {}
};

/// (I - M) is singular on some permutation cycle of the monomial matrix M.
class SingularFactor : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NotLevelN : public Error {
public:
    using Error::Error;
};

class NoSerreExponent : public Error {
public:
    using Error::Error;
};

}  // namespace nichols
