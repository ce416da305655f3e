#pragma once

#include <stdexcept>
#include <string>

namespace loopforge {

enum class Errc {
  bad_dimensions,
  not_latin_square,
  no_identity,
  parse_error,
  degree_mismatch,
  enumeration_too_large,
  not_solvable,
  not_nilpotent,
  not_normal,
  not_a_subloop,
  ill_defined,
  order_cap_exceeded,
  not_uniquely_2_divisible,
  not_automorphism,
  not_involutory,
  not_associative,
  construction_failed,
  unknown_dataset,
  internal_inconsistency,
};

const char* errc_name(Errc c) noexcept;

/// All library failures are reported as LoopError with a machine-checkable code.
class LoopError : public std::runtime_error {
 public:
  LoopError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw LoopError(code, msg);
}

}  // namespace loopforge
