#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagcx {

enum class Errc {
  malformed_face,    // duplicate vertex inside a face
  not_a_face,        // operation requires a face of the complex
  not_disjoint,      // join/cone on overlapping vertex sets
  domain,            // argument outside the mathematical domain
  precondition,      // structural precondition (flagness, color-shiftedness, ...)
  invalid_f_vector,  // f-vector rejected by the colored Kruskal-Katona test
  invariant,         // a proven identity failed at runtime
  unsupported,       // outside the supported size range
  parse,             // malformed textual input
  io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace flagcx
