#include "core/value.hpp"

#include <stdexcept>

namespace frex {

Value Value::list(std::vector<Value> items) {
  Value v(std::uint64_t{0});
  v.v_ = std::make_shared<const List>(std::move(items));
  return v;
}

const std::vector<Value>& Value::as_list() const {
  return *std::get<std::shared_ptr<const List>>(v_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_nat()) return a.as_nat() == b.as_nat();
  if (a.is_str()) return a.as_str() == b.as_str();
  return a.as_list() == b.as_list();
}

std::string Value::show() const {
  if (is_nat()) return std::to_string(as_nat());
  if (is_str()) {
    std::string out = "\"";
    for (char c : as_str()) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  }
  std::string out = "[";
  const auto& xs = as_list();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].show();
  }
  out += ']';
  return out;
}

nlohmann::ordered_json Value::to_json() const {
  if (is_nat()) return as_nat();
  if (is_str()) return as_str();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& x : as_list()) arr.push_back(x.to_json());
  return arr;
}

Value Value::from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    if (j.is_number_integer() && j.get<std::int64_t>() < 0)
      throw std::invalid_argument("negative literal in value");
    return Value::nat(j.get<std::uint64_t>());
  }
  if (j.is_string()) return Value::str(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Value> items;
    items.reserve(j.size());
    for (const auto& x : j) items.push_back(Value::from_json(x));
    return Value::list(std::move(items));
  }
  throw std::invalid_argument("malformed value: " + j.dump());
}

}  // namespace frex
