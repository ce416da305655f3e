#include "loopforge/errors.hpp"

namespace loopforge {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::bad_dimensions: return "bad_dimensions";
    case Errc::not_latin_square: return "not_latin_square";
    case Errc::no_identity: return "no_identity";
    case Errc::parse_error: return "parse_error";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::enumeration_too_large: return "enumeration_too_large";
    case Errc::not_solvable: return "not_solvable";
    case Errc::not_nilpotent: return "not_nilpotent";
    case Errc::not_normal: return "not_normal";
    case Errc::not_a_subloop: return "not_a_subloop";
    case Errc::ill_defined: return "ill_defined";
    case Errc::order_cap_exceeded: return "order_cap_exceeded";
    case Errc::not_uniquely_2_divisible: return "not_uniquely_2_divisible";
    case Errc::not_automorphism: return "not_automorphism";
    case Errc::not_involutory: return "not_involutory";
    case Errc::not_associative: return "not_associative";
    case Errc::construction_failed: return "construction_failed";
    case Errc::unknown_dataset: return "unknown_dataset";
    case Errc::internal_inconsistency: return "internal_inconsistency";
  }
  return "unknown_error";
}

}  // namespace loopforge
