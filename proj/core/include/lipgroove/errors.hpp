#pragma once

#include <stdexcept>
#include <string>

namespace lipgroove {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A segmentation mask contains no object pixels.
class NoObjectError : public Error {
public:
    using Error::Error;
};

/// Upper or lower lip height came out zero; ratios are undefined.
class DegenerateLipError : public Error {
public:
    using Error::Error;
};

/// Template id is empty, contains control characters, or does not
/// sanitize to a usable filename.
class InvalidIdError : public Error {
public:
    using Error::Error;
};

/// Enrolling an id that already exists without overwrite.
class DuplicateIdError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failure in the template store.
class StoreError : public Error {
public:
    using Error::Error;
};

}  // namespace lipgroove
