#include "flagcx/error.hpp"

namespace flagcx {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_face: return "malformed-face";
    case Errc::not_a_face: return "not-a-face";
    case Errc::not_disjoint: return "not-disjoint";
    case Errc::domain: return "domain";
    case Errc::precondition: return "precondition";
    case Errc::invalid_f_vector: return "invalid-f-vector";
    case Errc::invariant: return "invariant";
    case Errc::unsupported: return "unsupported";
    case Errc::parse: return "parse";
    case Errc::io: return "io";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace flagcx
