#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace frex {

// A carrier element of one of the bundled algebras: a natural number, a
// string, or a finite list of values (used for lists, tuples, pairs and
// matrices). Immutable and cheap to copy.
class Value {
public:
  Value() : v_(std::uint64_t{0}) {}

  static Value nat(std::uint64_t n) { return Value(n); }
  static Value str(std::string s) { return Value(std::move(s)); }
  static Value list(std::vector<Value> items);

  bool is_nat() const { return std::holds_alternative<std::uint64_t>(v_); }
  bool is_str() const { return std::holds_alternative<std::string>(v_); }
  bool is_list() const { return !is_nat() && !is_str(); }

  std::uint64_t as_nat() const { return std::get<std::uint64_t>(v_); }
  const std::string& as_str() const { return std::get<std::string>(v_); }
  const std::vector<Value>& as_list() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  // Display form; coincides with the surface-syntax literal grammar.
  std::string show() const;

  nlohmann::ordered_json to_json() const;
  static Value from_json(const nlohmann::json& j);

private:
  explicit Value(std::uint64_t n) : v_(n) {}
  explicit Value(std::string s) : v_(std::move(s)) {}

  using List = std::vector<Value>;
  std::variant<std::uint64_t, std::string, std::shared_ptr<const List>> v_;
};

}  // namespace frex
