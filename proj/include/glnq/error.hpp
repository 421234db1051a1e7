#pragma once

#include <stdexcept>
#include <string>

namespace glnq {

// Error codes for domain failures.  Every throwing operation in the library
// throws glnq::error with one of these codes so callers (and the CLI) can
// distinguish bad input from internal limits.
enum class errc {
  unsupported_lambda,   // Green polynomial requested outside the two closed-form families
  size_mismatch,        // |rho| != |lambda| or similar cardinality clash
  invalid_family,       // family/parameter combination that does not exist (e.g. s=1 transvection sum)
  range_error,          // index or parameter outside its valid range
  division_by_zero,     // field or polynomial division by zero
  singular_matrix,      // inverse/class label of a non-invertible matrix
  degree_mismatch,      // class label degrees do not sum to n
  dimension_mismatch,   // flag/partition dimension data inconsistent
  wrong_group,          // label or element handed to a table for a different group
  central_class,        // operation undefined on a central class
  central_element,      // operation undefined on a central element
  precision_loss,       // floating accumulation failed its exactness check
  too_large,            // guarded computation would exceed its work bound
  no_primitive_root,    // required root of unity absent from the field
  parse_error,          // malformed textual input
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::unsupported_lambda: return "unsupported_lambda";
    case errc::size_mismatch: return "size_mismatch";
    case errc::invalid_family: return "invalid_family";
    case errc::range_error: return "range_error";
    case errc::division_by_zero: return "division_by_zero";
    case errc::singular_matrix: return "singular_matrix";
    case errc::degree_mismatch: return "degree_mismatch";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::wrong_group: return "wrong_group";
    case errc::central_class: return "central_class";
    case errc::central_element: return "central_element";
    case errc::precision_loss: return "precision_loss";
    case errc::too_large: return "too_large";
    case errc::no_primitive_root: return "no_primitive_root";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace glnq
