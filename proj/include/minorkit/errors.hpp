#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every minorkit module.
 *
 * UsageError      caller violated a documented precondition (bad order, bad index, ...)
 * InputError      external data (JSON, CLI) failed to parse or validate
 * NumericError    an iterative numeric routine failed to converge
 * InternalError   a ring-contract invariant broke (e.g. inexact Bareiss division)
 */

#include <stdexcept>
#include <string>

namespace minorkit {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace minorkit
