#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpw {

enum class Errc {
  DivisionByZero,
  ParseError,
  DimensionMismatch,
  KindMismatch,
  ModelMismatch,
  ZeroPeriod,
  Unsupported,
  NotSeparable,
  NotUnital,
  NotRegularModel,
  EmptyGenerators,
  WindowOverflow,
  ZeroElement,
  PreconditionFailed,
  ConfigError,
};

const char* errc_name(Errc c);

/// Library-wide error type. Parse and config errors carry the offending
/// input position; everything else leaves it at no_position.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& message, std::size_t position = no_position)
      : std::runtime_error(message), code_(code), position_(position) {}

  Errc code() const { return code_; }
  std::size_t position() const { return position_; }

 private:
  Errc code_;
  std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::size_t position = Error::no_position) {
  throw Error(code, message, position);
}

}  // namespace cpw
