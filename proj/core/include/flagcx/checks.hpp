#pragma once

// One executable check per statement. Each check computes both sides of its
// inequality exactly and returns a CheckReport; instances outside a
// statement's hypotheses get a skipped verdict.

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "flagcx/corpus.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/report.hpp"

namespace flagcx {

enum class CheckId {
  zykov,                  // Turan-type face bound for flag complexes
  balanced_realization,   // balanced complex with the same f, at least the top Betti number
  flag_betti_bound,       // top Betti number bounded via (k, d)-canonical representations
  flag_face_bounds,       // face-number lower bounds from the top Betti number
  turan_comparison,       // face numbers dominate Turan complexes of smaller Betti number
  flag_f_polynomial,      // f-polynomial >= (1 + (a^{1/d} + 1) x)^d
  meshulam,               // f_{i-1} >= binom(2k, i)_k when β_{k-1} != 0
  vertex_betti_split,     // β_k(Δ) <= β_k(Ast v) + β_{k-1}(Lk v)
  revlex_betti_max,       // the minimal revlex complex has the largest top Betti number
  shifted_betti_formula,  // top Betti number of a color-shifted complex by counting
  balanced_betti_bound,   // balanced version of flag_betti_bound
  balanced_face_bounds,   // balanced version of flag_face_bounds
  balanced_f_polynomial,  // balanced version of flag_f_polynomial
  ffk_continuous,         // f_{j-1} >= binom(r, j) α^j for r-colorable complexes
  conj_face_bounds,       // conjectured face bounds in every dimension
  conj_turan_comparison,  // conjectured Turan comparison in every dimension
};

std::string_view to_string(CheckId id) noexcept;
std::optional<CheckId> parse_check_id(std::string_view name) noexcept;
bool is_conjecture(CheckId id) noexcept;
std::vector<CheckId> all_checks();
std::vector<CheckId> theorem_checks();
std::vector<CheckId> conjecture_checks();
/// "all", "theorems", "conjectures" or a comma-separated list of names.
std::vector<CheckId> parse_check_list(std::string_view list);

/// Lazily computed data shared by all checks on one instance. Not
/// thread-safe; use one context per worker.
class InstanceContext {
 public:
  explicit InstanceContext(Instance instance);

  const Instance& instance() const noexcept { return instance_; }
  const Complex& complex() const noexcept { return instance_.complex; }
  const FVector& f();
  const BettiVector& betti(unsigned p);
  bool is_flag();
  const Graph& graph();
  int chromatic_number();
  /// dim + 1 colors suffice for the 1-skeleton.
  bool is_balanced();

 private:
  Instance instance_;
  std::optional<FVector> f_;
  std::map<unsigned, BettiVector> betti_;
  std::optional<bool> flag_;
  std::optional<Graph> graph_;
  std::optional<int> chi_;
};

struct CheckOptions {
  /// Restricts the conjecture scans to β_{k-1} for this k.
  std::optional<int> conjecture_k;
};

CheckReport run_check(CheckId id, InstanceContext& ctx, unsigned p, const CheckOptions& options = {});

/// Decides f ≥ c · (a^{1/d} + 1)^i exactly. Returns +1 if strictly greater,
/// 0 if equal, -1 if smaller.
int compare_with_root_power(const BigInt& f, const BigInt& c, const BigInt& a, int d, int i);

}  // namespace flagcx
