#pragma once

#include <stdexcept>
#include <string>

namespace hyclif {

enum class Errc {
  context_mismatch,
  out_of_range,
  invalid_argument,
  domain,      // singular matrix, null vecfor, zero generator, ...
  too_large,   // dimension guard on exponential-cost checks
  parse,
  unknown_name,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::context_mismatch: return "context mismatch";
    case Errc::out_of_range: return "out of range";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::domain: return "domain error";
    case Errc::too_large: return "too large";
    case Errc::parse: return "parse error";
    case Errc::unknown_name: return "unknown name";
  }
  return "error";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace hyclif
