#pragma once

#include <initializer_list>
#include <vector>

#include "flagcx/bigint.hpp"
#include "flagcx/complex.hpp"

namespace testing {

inline flagcx::Complex cx(std::initializer_list<std::initializer_list<std::int64_t>> facets) {
  std::vector<flagcx::Face> faces;
  for (auto f : facets) faces.push_back(flagcx::Face::of(f));
  return flagcx::generate(faces);
}

inline std::vector<flagcx::BigInt> big(std::initializer_list<std::int64_t> xs) {
  return {xs.begin(), xs.end()};
}

inline flagcx::FVector fv(std::initializer_list<std::int64_t> xs) { return flagcx::FVector(big(xs)); }

}  // namespace testing
