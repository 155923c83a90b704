#pragma once

#include <string>
#include <utility>
#include <variant>

namespace frex {

enum class Errc {
  Ok,
  UnknownOp,
  ArityMismatch,
  VarOutOfScope,
  EndpointMismatch,
  UnknownAxiom,
  MissingAlgebra,
  SignatureMismatch,
  NoCoproductRegistered,
  NotProvable,
  Misaligned,
  ParseError,
  UnknownAlgebra,
  CheckFailed,
  BadValue,
  IoError,
};

const char* errc_name(Errc c);

// Outcome of an operation that can fail with a diagnosable reason.
struct Status {
  Errc code = Errc::Ok;
  std::string message;

  bool ok() const { return code == Errc::Ok; }

  static Status success() { return {}; }
  static Status fail(Errc c, std::string msg) { return {c, std::move(msg)}; }
};

template <typename T>
class Result {
public:
  Result(T value) : v_(std::move(value)) {}
  Result(Status status) : v_(std::move(status)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  const T& value() const { return std::get<T>(v_); }
  T&& take() { return std::move(std::get<T>(v_)); }
  const Status& status() const { return std::get<Status>(v_); }

private:
  std::variant<T, Status> v_;
};

}  // namespace frex
