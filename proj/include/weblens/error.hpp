#pragma once

#include <stdexcept>
#include <string>

namespace weblens {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedDomain : public Error {
 public:
  explicit MalformedDomain(const std::string& raw)
      : Error("malformed domain: '" + raw + "'") {}
};

/// Bad input row or record. `where` is usually "path:line".
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what) {}
};

class DuplicateDomain : public Error {
 public:
  DuplicateDomain(const std::string& where, const std::string& domain)
      : Error(where + ": duplicate domain '" + domain + "'") {}
};

class DuplicateAccount : public Error {
 public:
  DuplicateAccount(const std::string& where, const std::string& account)
      : Error(where + ": duplicate account_id '" + account + "'") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace weblens
