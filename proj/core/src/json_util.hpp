#pragma once

// Shared helpers for the JSON readers and writers. Private to the library.

#include <string>
#include <string_view>

#include "hypcert/errors.hpp"
#include "hypcert/rational.hpp"
#include <nlohmann/json.hpp>

namespace hypcert::detail {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into "source:line:column: message".
Json parse_json(std::string_view text, std::string_view source);

/// Tracks the JSON pointer of the value being read, for diagnostics.
class Field {
 public:
  Field(const Json& value, std::string source, std::string path = "")
      : v_(&value), source_(std::move(source)), path_(std::move(path)) {}

  const Json& value() const { return *v_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const;

  bool has(const char* key) const;
  Field at(const char* key) const;
  Field at(std::size_t index) const;
  std::size_t size() const;

  const Json& object() const;
  const Json& array() const;
  std::string string() const;
  bool boolean() const;
  long integer() const;
  /// Integer or "num/den" string; floats are rejected.
  Rational rational() const;

 private:
  const Json* v_;
  std::string source_;
  std::string path_;
};

Json rational_json(const Rational& q);

}  // namespace hypcert::detail
