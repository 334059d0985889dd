#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ld {

// Selector into a term: which child of a Bind/Flat node.
enum class PathSel : uint8_t { Arg, Body };
using Path = std::vector<PathSel>;

std::string path_to_string(const Path& p);

enum class ErrCode : uint8_t {
  SyntaxError,
  UnboundName,
  MissingSortHead,
  DanglingReference,
  ExcludedVariable,
  NotAFunction,
  DomainMismatch,
  CastMismatch,
  IllTypedSubterm,
  FuelExhausted,
  MonotonicityViolation,
};

const char* err_name(ErrCode c);

struct Error {
  ErrCode code;
  Path path{};          // offending subterm, when known
  std::string detail{}; // free-form context (token, identifier, ...)
  size_t offset = 0;    // byte offset for parse errors

  std::string to_string() const;
};

template <class T>
class Result {
public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const Error& error() const { return std::get<Error>(v_); }

private:
  std::variant<T, Error> v_;
};

} // namespace ld
