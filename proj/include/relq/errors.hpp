#pragma once

#include <stdexcept>
#include <string>

namespace relq {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// A register value does not fit the register it is assigned to.
class InvalidValue : public Error {
  public:
    using Error::Error;
};

/// A register name that is not part of the layout.
class UnknownRegister : public Error {
  public:
    using Error::Error;
};

/// A bit index outside the register width.
class InvalidBit : public Error {
  public:
    using Error::Error;
};

/// An oracle table that does not cover every joint input value, or whose
/// outputs do not fit the output register.
class IncompleteOracle : public Error {
  public:
    using Error::Error;
};

/// The all-zero hidden string, which no periodic function admits.
class InvalidHiddenString : public Error {
  public:
    using Error::Error;
};

/// A GF(2) system of full rank, which contradicts every nonzero hidden string.
class ContradictorySystem : public Error {
  public:
    using Error::Error;
};

/// Advance-knowledge bits that disagree with the target they describe.
class ContradictoryAdvance : public Error {
  public:
    using Error::Error;
};

/// A database size that is not a power of two.
class InvalidN : public Error {
  public:
    using Error::Error;
};

/// An unsatisfiable constraint network: no motion of the input part exists.
class JammedMachine : public Error {
  public:
    using Error::Error;
};

/// A malformed input file. `path` holds the JSON path of the offending node.
class SchemaError : public Error {
  public:
    SchemaError(const std::string &path, const std::string &what)
        : Error(path + ": " + what), path_(path) {}

    const std::string &path() const { return path_; }

  private:
    std::string path_;
};

} // namespace relq
