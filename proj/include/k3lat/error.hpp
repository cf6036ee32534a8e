#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k3lat {

// Domain errors. The CLI maps ParseError and its subclasses to exit code 1
// and every other Error to exit code 2.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DegenerateLattice : public Error {
  public:
    DegenerateLattice() : Error("degenerate lattice (determinant 0)") {}
    using Error::Error;
};

class NotPositiveDefinite : public Error {
  public:
    NotPositiveDefinite() : Error("Gram matrix is not positive definite") {}
    using Error::Error;
};

class IndefiniteLattice : public Error {
  public:
    IndefiniteLattice() : Error("lattice is not definite") {}
    using Error::Error;
};

class NonPrimitiveSublattice : public Error {
  public:
    NonPrimitiveSublattice() : Error("sublattice is not primitive in the ambient lattice") {}
    using Error::Error;
};

class ZeroVector : public Error {
  public:
    ZeroVector() : Error("zero vector not allowed") {}
    using Error::Error;
};

class WrongSignature : public Error {
  public:
    using Error::Error;
};

class NormOutOfRange : public Error {
  public:
    using Error::Error;
};

class DegenerateExtension : public Error {
  public:
    DegenerateExtension() : Error("degenerate extension: bordered Gram matrix has determinant 0") {}
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class SyntaxError : public ParseError {
  public:
    SyntaxError(const std::string& what, std::size_t offset)
        : ParseError("syntax error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

class UnknownLattice : public ParseError {
  public:
    using ParseError::ParseError;
};

class GramFileError : public ParseError {
  public:
    using ParseError::ParseError;
};

}  // namespace k3lat
