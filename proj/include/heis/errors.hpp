#pragma once

#include <stdexcept>
#include <string>

namespace heis {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent data handed to an operation.
class InputError : public Error {
  public:
    using Error::Error;
};

class ShapeMismatch : public InputError {
  public:
    using InputError::InputError;
};

class MembershipError : public InputError {
  public:
    using InputError::InputError;
};

class OffGridError : public InputError {
  public:
    using InputError::InputError;
};

class OffGridShift : public InputError {
  public:
    using InputError::InputError;
};

class IndexMismatch : public InputError {
  public:
    using InputError::InputError;
};

class GridIncompatible : public InputError {
  public:
    using InputError::InputError;
};

class OrderTooLarge : public InputError {
  public:
    using InputError::InputError;
};

class ParseError : public InputError {
  public:
    using InputError::InputError;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

/// A numerical guard tripped: the requested evaluation would overflow or lose
/// the data it is meant to represent.
class NumericalGuard : public Error {
  public:
    using Error::Error;
};

class NonFinite : public NumericalGuard {
  public:
    using NumericalGuard::NumericalGuard;
};

class OverflowGuard : public NumericalGuard {
  public:
    using NumericalGuard::NumericalGuard;
};

class DivergenceGuard : public NumericalGuard {
  public:
    using NumericalGuard::NumericalGuard;
};

class SupportOverflow : public NumericalGuard {
  public:
    using NumericalGuard::NumericalGuard;
};

} // namespace heis
