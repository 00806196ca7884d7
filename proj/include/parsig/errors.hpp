#pragma once

#include <stdexcept>
#include <string>

namespace parsig {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's contract.
class InputError : public Error {
public:
    using Error::Error;
};

// A graph6 record that does not decode.
class MalformedRecordError : public InputError {
public:
    using InputError::InputError;
};

// Problem is too large for an exact/built-in routine.
class CapacityError : public Error {
public:
    using Error::Error;
};

class UnsupportedSizeError : public CapacityError {
public:
    using CapacityError::CapacityError;
};

}  // namespace parsig
