#include "core/signature.hpp"

#include <stdexcept>

namespace frex {

Signature::Signature(std::vector<Op> ops) : ops_(std::move(ops)) {
  for (const auto& op : ops_) {
    if (op.arity < 0) throw std::invalid_argument("negative arity for op " + op.name);
    if (!arities_.emplace(op.name, op.arity).second)
      throw std::invalid_argument("duplicate operation symbol " + op.name);
  }
}

std::optional<int> Signature::arity(std::string_view name) const {
  auto it = arities_.find(name);
  if (it == arities_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Signature& a, const Signature& b) {
  return a.arities_ == b.arities_;
}

}  // namespace frex
