#ifndef SDIO_ERROR_HPP
#define SDIO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdio {

// Error kinds thrown by the library. Domain negatives (a number is not
// smooth, a tuple fails verification, no relation exists) are ordinary
// return values and never show up here.
enum class ErrorCode {
  InvalidInput,
  ParseError,
  NonDistinctNodes,
  ZeroPolynomial,
  ConstantPolynomial,
  PreconditionViolated,
  InsufficientData,
  NotInFamily,
  InconsistentRelations,
  ReconstructionFailure,
};

std::string_view error_code_name(ErrorCode code) noexcept;

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

}  // namespace sdio

#endif
