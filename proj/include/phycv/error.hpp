#pragma once

#include <stdexcept>
#include <string>

namespace phycv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A grid or image dimension is below the supported minimum.
class InvalidDimension : public Error {
public:
    using Error::Error;
};

/// Operands that must share a shape do not.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A parameter violates its documented range.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace phycv
