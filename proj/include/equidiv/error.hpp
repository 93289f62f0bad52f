#pragma once

#include <stdexcept>
#include <string>

namespace equidiv {

/// Malformed or out-of-contract input (bad ids, non-normalized measures, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computed object failed its independent re-check.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Refinement or search budget exhausted before the goal was reached.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Something the mathematics says cannot happen did happen.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace equidiv
