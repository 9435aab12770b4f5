#ifndef STRMOD_ERRORS_HPP
#define STRMOD_ERRORS_HPP
//
// strmod / errors
// Exception hierarchy shared by the whole library.
//

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strmod {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violation by the caller (dimension mismatch, bad index,
/// field mismatch, ...). Maps to CLI exit code 2.
class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

/// Invalid input data (malformed word, bad module file, ...). Maps to CLI
/// exit code 1.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Syntax or validity failure while reading a word; carries the offset of
/// the offending character in the input text.
class ParseError : public DomainError {
public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A randomized certification budget was exhausted without reaching a
/// certificate. Never a silent wrong answer.
class CertificationError : public DomainError {
public:
  explicit CertificationError(const std::string& what) : DomainError(what) {}
};

} // namespace strmod

#endif
