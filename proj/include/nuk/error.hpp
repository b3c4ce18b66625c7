#pragma once

#include <stdexcept>
#include <string>

namespace nuk {

enum class Err {
  parse,
  negative_component,
  not_normalized,
  dimension_mismatch,
  out_of_domain,
  out_of_range,
  too_much_truncation,
  not_realizable,
  not_convertible,
  unsupported_metric,
  budget_exceeded,
  invalid_argument,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) {
  throw Error(c, what);
}

const char* err_name(Err c);

}  // namespace nuk
