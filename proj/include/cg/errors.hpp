#ifndef CG_ERRORS_HPP
#define CG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cg {

enum class ErrorCode {
  config,
  domain,
  numeric,
  unsupported_order,
  not_critical,
  inconsistent_criticality,
  regime_inapplicable,
  invalid_profile,
  invalid_potential,
  window_empty,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cg

#endif
