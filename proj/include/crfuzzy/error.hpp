#pragma once

#include <stdexcept>
#include <string>

namespace crfuzzy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise unusable crisp input.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A variable, term or rule breaks a structural invariant.
class ModelError : public Error {
public:
    using Error::Error;
};

/// Aggregated output carries (numerically) no mass, so no centroid exists.
class NoRuleFiredError : public Error {
public:
    using Error::Error;
};

/// Bad sweep specification (unknown variable, out-of-universe axis, ...).
class SweepSpecError : public Error {
public:
    using Error::Error;
};

/// Empty candidate batch or duplicate ids.
class BatchError : public Error {
public:
    using Error::Error;
};

/// Malformed model document or CSV input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace crfuzzy
