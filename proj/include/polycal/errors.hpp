#pragma once

#include <stdexcept>
#include <string>

namespace polycal {

/// Base class for all structured errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what = "dimension mismatch") : Error(what) {}
};

/// Raised by operations whose preconditions require a nonempty set.
class EmptySetError : public Error {
public:
    explicit EmptySetError(const std::string& what = "empty set") : Error(what) {}
};

class PointNotInSetError : public Error {
public:
    explicit PointNotInSetError(const std::string& what = "point not in set") : Error(what) {}
};

class NotInDomainError : public Error {
public:
    explicit NotInDomainError(const std::string& what = "point not in domain") : Error(what) {}
};

class NotInGraphError : public Error {
public:
    explicit NotInGraphError(const std::string& what = "point not in graph") : Error(what) {}
};

class NegativeScalarError : public Error {
public:
    explicit NegativeScalarError(const std::string& what = "negative scalar") : Error(what) {}
};

/// Raised when an optimal value function would take -inf somewhere.
class ImproperValueError : public Error {
public:
    explicit ImproperValueError(const std::string& what = "optimal value function is improper") : Error(what) {}
};

class MalformedInstanceError : public Error {
public:
    explicit MalformedInstanceError(const std::string& what = "malformed instance") : Error(what) {}
};

class CapsExceededError : public Error {
public:
    explicit CapsExceededError(const std::string& what = "instance caps exceeded") : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what), line(line), column(column) {}
    int line;
    int column;
};

} // namespace polycal
