#pragma once

#include <stdexcept>
#include <string>

namespace isogame {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrderTooLarge : public Error {
public:
    using Error::Error;
};

class BadEdge : public Error {
public:
    using Error::Error;
};

class MalformedGraph6 : public Error {
public:
    using Error::Error;
};

class BadSpec : public Error {
public:
    using Error::Error;
};

class PatternTooLarge : public Error {
public:
    using Error::Error;
};

class IllegalMove : public Error {
public:
    using Error::Error;
};

class TerminalState : public Error {
public:
    using Error::Error;
};

/// Raised when the solver's memo table would grow past its configured cap.
class StateSpaceBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Raised by the naive oracles and the harness when an instance is too big
/// for exhaustive treatment.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace isogame
