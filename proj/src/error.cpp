#include "nuk/error.hpp"

namespace nuk {

const char* err_name(Err c) {
  switch (c) {
    case Err::parse:
      return "parse error";
    case Err::negative_component:
      return "negative component";
    case Err::not_normalized:
      return "not normalized";
    case Err::dimension_mismatch:
      return "dimension mismatch";
    case Err::out_of_domain:
      return "out of domain";
    case Err::out_of_range:
      return "out of range";
    case Err::too_much_truncation:
      return "too much truncation";
    case Err::not_realizable:
      return "not realizable";
    case Err::not_convertible:
      return "not convertible";
    case Err::unsupported_metric:
      return "unsupported metric";
    case Err::budget_exceeded:
      return "budget exceeded";
    case Err::invalid_argument:
      return "invalid argument";
  }
  return "unknown error";
}

}  // namespace nuk
