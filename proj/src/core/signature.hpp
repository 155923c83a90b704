#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frex {

// Operation symbols with arities. Declaration order is kept so that
// serialization is deterministic.
class Signature {
public:
  struct Op {
    std::string name;
    int arity = 0;
  };

  Signature() = default;
  explicit Signature(std::vector<Op> ops);

  const std::vector<Op>& ops() const { return ops_; }
  std::optional<int> arity(std::string_view name) const;
  bool has_op(std::string_view name) const { return arity(name).has_value(); }

  friend bool operator==(const Signature& a, const Signature& b);
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

private:
  std::vector<Op> ops_;
  std::map<std::string, int, std::less<>> arities_;
};

}  // namespace frex
