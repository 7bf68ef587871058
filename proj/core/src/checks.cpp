#include "flagcx/checks.hpp"

#include <algorithm>
#include <array>

#include "flagcx/canon.hpp"
#include "flagcx/colored.hpp"
#include "flagcx/error.hpp"
#include "flagcx/turan.hpp"

namespace flagcx {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::pair<CheckId, std::string_view>, 16> kNames{{
    {CheckId::zykov, "zykov"},
    {CheckId::balanced_realization, "balanced-realization"},
    {CheckId::flag_betti_bound, "flag-betti-bound"},
    {CheckId::flag_face_bounds, "flag-face-bounds"},
    {CheckId::turan_comparison, "turan-comparison"},
    {CheckId::flag_f_polynomial, "flag-f-polynomial"},
    {CheckId::meshulam, "meshulam"},
    {CheckId::vertex_betti_split, "vertex-betti-split"},
    {CheckId::revlex_betti_max, "revlex-betti-max"},
    {CheckId::shifted_betti_formula, "shifted-betti-formula"},
    {CheckId::balanced_betti_bound, "balanced-betti-bound"},
    {CheckId::balanced_face_bounds, "balanced-face-bounds"},
    {CheckId::balanced_f_polynomial, "balanced-f-polynomial"},
    {CheckId::ffk_continuous, "ffk-continuous"},
    {CheckId::conj_face_bounds, "conj-face-bounds"},
    {CheckId::conj_turan_comparison, "conj-turan-comparison"},
}};

json numbers(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(json_number(x));
  return out;
}

CheckReport skipped(CheckReport r, std::string why) {
  r.verdict = Verdict::skipped;
  r.note = std::move(why);
  return r;
}

// Face-count lower bounds from a = β_{d-1} > 0 through the (d, d)-canonical
// representation; with `rigid` also the all-higher-equalities clause.
// Failing bounds yield `bad` (fail for theorems, violation for conjectures).
void face_bounds(CheckReport& r, const FVector& f, const BigInt& a, int d, bool rigid, Verdict bad) {
  const auto rep = canonical_rep(a, d, d);
  const auto bounds = face_lower_bounds(a, d);
  r.witness["a"] = json_number(a);
  r.witness["d"] = d;
  r.witness["rep"] = rep.indices();
  r.witness["f"] = numbers(f.entries());
  r.witness["bound"] = numbers(bounds);
  bool tight = false;
  for (int i = 0; i <= d; ++i) {
    const auto fi = f(i - 1);
    if (fi < bounds[static_cast<std::size_t>(i)]) {
      r.verdict = bad;
      r.note = "f_" + std::to_string(i - 1) + " below its lower bound";
      return;
    }
    if (i >= 1 && fi == bounds[static_cast<std::size_t>(i)]) tight = true;
  }
  if (rigid) {
    for (int k = rep.s() + 1; k <= d; ++k) {
      if (f(k - 1) != bounds[static_cast<std::size_t>(k)]) continue;
      for (int i = k; i <= d; ++i) {
        if (f(i - 1) != bounds[static_cast<std::size_t>(i)]) {
          r.verdict = bad;
          r.note = "equality at i=" + std::to_string(k) + " but not at i=" + std::to_string(i);
          return;
        }
      }
    }
  }
  r.verdict = tight ? Verdict::equality : Verdict::pass;
}

// β_{d-1} <= the (k, d)-canonical bound for every k in [d].
void betti_bounds(CheckReport& r, const FVector& f, std::int64_t beta, int d) {
  r.witness["d"] = d;
  r.witness["beta"] = beta;
  r.witness["bound"] = json::array();
  bool tight = false;
  for (int k = 1; k <= d; ++k) {
    const auto bound = top_betti_upper_bound(f(k - 1), k, d);
    r.witness["bound"].push_back(json_number(bound));
    if (beta > bound) {
      r.verdict = Verdict::fail;
      r.note = "top Betti number exceeds the bound for k=" + std::to_string(k);
      return;
    }
    if (beta == bound) tight = true;
  }
  r.verdict = tight ? Verdict::equality : Verdict::pass;
}

void f_polynomial(CheckReport& r, InstanceContext& ctx, std::int64_t a, int d) {
  const auto& f = ctx.f();
  const BigInt root = iroot_floor(a, static_cast<unsigned>(d));
  const bool integral = ipow(root, static_cast<unsigned>(d)) == a;
  r.witness["a"] = a;
  r.witness["d"] = d;
  r.witness["root_integral"] = integral;
  json cmp = json::array();
  bool all_equal = true;
  for (int i = 0; i <= d; ++i) {
    const int c = compare_with_root_power(f(i - 1), binomial(d, i), a, d, i);
    cmp.push_back(c);
    if (c < 0) {
      r.witness["cmp"] = cmp;
      r.verdict = Verdict::fail;
      r.note = "coefficient of x^" + std::to_string(i) + " below the bound";
      return;
    }
    if (c != 0) all_equal = false;
  }
  r.witness["cmp"] = cmp;
  if (!integral) {
    r.verdict = all_equal ? Verdict::fail : Verdict::pass;
    if (all_equal) r.note = "equality with an irrational root";
    return;
  }
  const auto n = to_int64(f(0)).value_or(-1);
  const bool iso = ctx.is_flag() && is_turan_graph(ctx.graph(), d) && BigInt(n) == BigInt(d) * (root + 1);
  r.witness["turan_isomorphic"] = iso;
  if (all_equal != iso) {
    r.verdict = Verdict::fail;
    r.note = all_equal ? "equality without being the Turan complex" : "Turan complex without equality";
    return;
  }
  r.verdict = all_equal ? Verdict::equality : Verdict::pass;
}

// The color count d of a balanced instance, or nullopt.
std::optional<int> balanced_d(InstanceContext& ctx) {
  const auto& inst = ctx.instance();
  if (inst.colored) {
    if (inst.colored->is_balanced()) return inst.colored->d();
    return std::nullopt;
  }
  if (ctx.complex().dim() >= 0 && ctx.is_balanced()) return ctx.complex().dim() + 1;
  return std::nullopt;
}

bool is_pi_revlex(const Complex& c, int d) {
  for (int k = 1; k <= c.dim() + 1; ++k) {
    const auto faces = c.faces(k - 1);
    auto prefix = revlex_prefix(static_cast<std::int64_t>(faces.size()), k, d);
    std::sort(prefix.begin(), prefix.end());
    if (!std::equal(prefix.begin(), prefix.end(), faces.begin(), faces.end())) return false;
  }
  return true;
}

CheckReport check_zykov(CheckReport r, InstanceContext& ctx) {
  if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
  auto z = zykov_check(ctx.complex());
  r.verdict = z.verdict;
  r.witness = std::move(z.witness);
  r.note = std::move(z.note);
  return r;
}

CheckReport check_balanced_realization(CheckReport r, InstanceContext& ctx, unsigned p) {
  if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
  const int dim = ctx.complex().dim();
  const auto gamma = revlex_complex_fvec(ctx.f(), dim + 1);
  const auto beta_gamma = betti(gamma.complex(), dim, PrimeField(p));
  const auto beta = ctx.betti(p)(dim);
  const bool same_f = f_vector(gamma.complex()) == ctx.f();
  r.witness["dim"] = dim;
  r.witness["same_f"] = same_f;
  r.witness["beta"] = beta;
  r.witness["beta_revlex"] = beta_gamma;
  if (!same_f || beta_gamma < beta) {
    r.verdict = Verdict::fail;
    r.note = same_f ? "revlex realization has a smaller top Betti number" : "f-vectors differ";
  } else {
    r.verdict = beta_gamma == beta ? Verdict::equality : Verdict::pass;
  }
  return r;
}

CheckReport check_turan_comparison(CheckReport r, InstanceContext& ctx, std::int64_t a, int d) {
  const auto& f = ctx.f();
  r.witness["a"] = a;
  r.witness["d"] = d;
  r.witness["turan"] = json::array();
  bool tie = false;
  for (std::int64_t n = d;; ++n) {
    const auto beta_t = turan_coeff(n - d, d, d);
    if (beta_t > a) break;
    const auto row = turan_row(n, d).values;
    bool dominated = true;
    for (int k = 0; k <= d; ++k) {
      if (f(k - 1) < row[static_cast<std::size_t>(k)]) dominated = false;
    }
    json entry{{"n", n}, {"beta", json_number(beta_t)}, {"dominated", dominated}};
    if (!dominated) {
      r.witness["turan"].push_back(entry);
      r.verdict = Verdict::fail;
      r.note = "f does not dominate f(T_" + std::to_string(d) + "(" + std::to_string(n) + "))";
      return r;
    }
    if (beta_t == a) {
      const bool same_f0 = f(0) == n;
      const bool same_f = f.entries() == row;
      const bool iso = same_f0 && is_turan_graph(ctx.graph(), d);
      entry["same_f0"] = same_f0;
      entry["same_f"] = same_f;
      entry["isomorphic"] = iso;
      if (same_f0 != same_f || same_f != iso) {
        r.witness["turan"].push_back(entry);
        r.verdict = Verdict::fail;
        r.note = "the three equality conditions disagree";
        return r;
      }
      tie = tie || same_f;
    }
    r.witness["turan"].push_back(entry);
  }
  r.verdict = tie ? Verdict::equality : Verdict::pass;
  return r;
}

CheckReport check_meshulam(CheckReport r, InstanceContext& ctx, unsigned p) {
  if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
  const auto& f = ctx.f();
  const auto& b = ctx.betti(p);
  json ks = json::array();
  bool tight = false;
  for (int k = 1; k <= ctx.complex().dim() + 1; ++k) {
    if (b(k - 1) == 0) continue;
    ks.push_back(k);
    for (int i = 0; i <= k; ++i) {
      const auto bound = turan_coeff(2 * k, i, k);
      if (f(i - 1) < bound) {
        r.witness["k"] = ks;
        r.verdict = Verdict::fail;
        r.note = "f_" + std::to_string(i - 1) + " < binom(2k, i)_k for k=" + std::to_string(k);
        return r;
      }
      if (i >= 1 && f(i - 1) == bound) tight = true;
    }
  }
  if (ks.empty()) return skipped(std::move(r), "all reduced Betti numbers vanish");
  r.witness["k"] = ks;
  r.verdict = tight ? Verdict::equality : Verdict::pass;
  return r;
}

CheckReport check_vertex_split(CheckReport r, InstanceContext& ctx, unsigned p) {
  const auto& c = ctx.complex();
  if (c.dim() < 0) return skipped(std::move(r), "no vertices");
  const PrimeField field(p);
  const auto& b = ctx.betti(p);
  std::int64_t tight = 0;
  for (const auto& v : c.vertices()) {
    const auto ast = betti_vector(antistar(c, Face{v}), field);
    const auto lk = betti_vector(link(c, Face{v}), field);
    for (int k = 0; k <= c.dim(); ++k) {
      const auto rhs = ast(k) + lk(k - 1);
      if (b(k) > rhs) {
        r.witness["vertex"] = to_string(v);
        r.witness["k"] = k;
        r.witness["beta"] = b(k);
        r.witness["rhs"] = rhs;
        r.verdict = Verdict::fail;
        r.note = "Mayer-Vietoris inequality fails";
        return r;
      }
      if (b(k) > 0 && b(k) == rhs) ++tight;
    }
  }
  r.witness["vertices"] = c.vertices().size();
  r.witness["tight"] = tight;
  r.verdict = Verdict::pass;
  return r;
}

CheckReport check_revlex_max(CheckReport r, InstanceContext& ctx, unsigned p) {
  if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
  const auto& c = ctx.complex();
  const int d = c.dim();
  const PrimeField field(p);
  const auto beta = ctx.betti(p)(d);
  const auto top = static_cast<std::int64_t>(c.num_faces(d));
  const auto gamma = revlex_complex_top(top, d + 1);
  const auto beta_gamma = betti(gamma.complex(), d, field);
  r.witness["d"] = d;
  r.witness["beta"] = beta;
  r.witness["beta_revlex"] = beta_gamma;
  auto fail = [&](std::string why) {
    r.verdict = Verdict::fail;
    r.note = std::move(why);
    return r;
  };
  if (beta_gamma < beta) return fail("minimal revlex complex has a smaller top Betti number");
  if (d >= 1) {
    const auto sigma = build_sigma(c);
    const auto beta_sigma = betti(sigma.sigma.complex(), d, field);
    std::int64_t parts = 0;
    for (std::size_t i = 0; i < sigma.parts.size(); ++i) {
      const auto part = betti(sigma.parts[i].complex(), d - 1, field);
      if (i >= 1) parts += part;
      if (part < betti(sigma.links[i], d - 1, field)) return fail("Σ_i has a smaller Betti number than its link");
    }
    r.witness["a"] = sigma.a;
    r.witness["beta_sigma"] = beta_sigma;
    r.witness["beta_parts"] = parts;
    if (beta_sigma != parts) return fail("β_d(Σ) differs from the sum over the parts");
    if (beta_sigma < beta) return fail("β_d(Σ) < β_d(Δ)");
    if (beta_gamma < beta_sigma) return fail("minimal revlex complex loses to Σ");
  }
  r.verdict = beta_gamma == beta ? Verdict::equality : Verdict::pass;
  return r;
}

CheckReport check_shifted_formula(CheckReport r, InstanceContext& ctx, unsigned p) {
  const auto& inst = ctx.instance();
  if (!inst.colored || !inst.colored->is_balanced()) return skipped(std::move(r), "not a balanced colored complex");
  if (!is_color_shifted(*inst.colored)) return skipped(std::move(r), "not color-shifted");
  const int d = inst.colored->d();
  const auto count = shifted_betti_top(*inst.colored);
  const auto hat = hat_complex(*inst.colored);
  const auto& b = ctx.betti(p);
  const bool pure = is_pure(ctx.complex());
  r.witness["d"] = d;
  r.witness["count"] = json_number(count);
  r.witness["beta"] = b.entries();
  r.witness["pure"] = pure;
  if (count != b(d - 1)) {
    r.verdict = Verdict::fail;
    r.note = "counted top Betti number differs from homology";
  } else if (BigInt(hat.num_faces(d - 1)) != count) {
    r.verdict = Verdict::fail;
    r.note = "hat complex top faces differ from the count";
  } else if (pure && std::any_of(b.entries().begin(), b.entries().end() - 1, [](auto x) { return x != 0; })) {
    r.verdict = Verdict::fail;
    r.note = "pure color-shifted complex with lower homology";
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

CheckReport check_balanced_betti(CheckReport r, InstanceContext& ctx, unsigned p) {
  const auto d = balanced_d(ctx);
  if (!d) return skipped(std::move(r), "not balanced");
  const auto& f = ctx.f();
  const auto beta = ctx.betti(p)(*d - 1);
  betti_bounds(r, f, beta, *d);
  if (r.verdict == Verdict::fail || !ctx.instance().colored || !is_pi_revlex(ctx.complex(), *d)) return r;
  // Revlex complexes over the canonical partition attain the bound whenever
  // their top count is the one the canonical representation predicts.
  r.witness["revlex"] = true;
  for (int k = 1; k <= *d; ++k) {
    const auto n = f(k - 1);
    const auto predicted = k == *d ? n : iterate_shadow_up(n, k, *d, *d - k - 1);
    if (f(*d - 1) != predicted) continue;
    if (top_betti_upper_bound(n, k, *d) != beta) {
      r.verdict = Verdict::fail;
      r.note = "revlex complex misses the bound for k=" + std::to_string(k);
      return r;
    }
  }
  return r;
}

CheckReport check_ffk_continuous(CheckReport r, InstanceContext& ctx) {
  const auto& c = ctx.complex();
  if (c.dim() < 0) return skipped(std::move(r), "no vertices");
  const auto& f = ctx.f();
  const int chi = ctx.chromatic_number();
  const int n = static_cast<int>(c.num_faces(0));
  r.witness["chi"] = chi;
  r.witness["n"] = n;
  std::int64_t tight = 0;
  for (int r_colors = chi; r_colors <= std::max(chi, n); ++r_colors) {
    for (int k = 1; k <= std::min(r_colors, c.dim() + 1); ++k) {
      for (int j = 1; j < k; ++j) {
        const auto lhs = ipow(f(j - 1), static_cast<unsigned>(k)) *
                         ipow(binomial(r_colors, k), static_cast<unsigned>(j));
        const auto rhs = ipow(binomial(r_colors, j), static_cast<unsigned>(k)) *
                         ipow(f(k - 1), static_cast<unsigned>(j));
        if (lhs < rhs) {
          r.witness["r"] = r_colors;
          r.witness["k"] = k;
          r.witness["j"] = j;
          r.verdict = Verdict::fail;
          r.note = "continuous colorability bound fails";
          return r;
        }
        if (lhs == rhs) ++tight;
      }
    }
  }
  r.witness["tight"] = tight;
  r.verdict = tight > 0 ? Verdict::equality : Verdict::pass;
  return r;
}

CheckReport check_conj_face_bounds(CheckReport r, InstanceContext& ctx, unsigned p, std::optional<int> only) {
  if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
  const auto& f = ctx.f();
  const auto& b = ctx.betti(p);
  json tested = json::array();
  bool tight = false;
  for (int k = 1; k <= ctx.complex().dim() + 1; ++k) {
    if (b(k - 1) <= 0 || (only && *only != k)) continue;
    CheckReport part;
    face_bounds(part, f, b(k - 1), k, false, Verdict::violation);
    part.witness["k"] = k;
    tested.push_back(part.witness);
    if (part.verdict == Verdict::violation) {
      r.witness["tested"] = tested;
      r.verdict = Verdict::violation;
      r.note = part.note + " (k=" + std::to_string(k) + ")";
      return r;
    }
    tight = tight || part.verdict == Verdict::equality;
  }
  if (tested.empty()) return skipped(std::move(r), "all reduced Betti numbers vanish");
  r.witness["tested"] = tested;
  r.verdict = tight ? Verdict::equality : Verdict::pass;
  return r;
}

CheckReport check_conj_turan(CheckReport r, InstanceContext& ctx, unsigned p, std::optional<int> only) {
  if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
  const auto& f = ctx.f();
  const auto& b = ctx.betti(p);
  json tested = json::array();
  for (int k = 0; k <= ctx.complex().dim(); ++k) {
    const auto a = b(k);
    if (a <= 0 || (only && *only != k + 1)) continue;
    const int parts = k + 1;
    for (std::int64_t n = parts;; ++n) {
      const auto beta_t = turan_coeff(n - parts, parts, parts);
      if (beta_t > a) break;
      const auto row = turan_row(n, parts).values;
      for (int i = 0; i <= k; ++i) {
        if (f(i) < row[static_cast<std::size_t>(i + 1)]) {
          r.witness["k"] = k;
          r.witness["a"] = a;
          r.witness["turan_n"] = n;
          r.witness["f"] = numbers(f.entries());
          r.witness["f_turan"] = numbers(row);
          r.verdict = Verdict::violation;
          r.note = "f_" + std::to_string(i) + " below the Turan complex";
          return r;
        }
      }
      tested.push_back(json{{"k", k}, {"n", n}});
    }
  }
  if (tested.empty()) return skipped(std::move(r), "all reduced Betti numbers vanish");
  r.witness["tested"] = tested;
  r.verdict = Verdict::pass;
  return r;
}

}  // namespace

std::string_view to_string(CheckId id) noexcept {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "unknown";
}

std::optional<CheckId> parse_check_id(std::string_view name) noexcept {
  for (const auto& [key, n] : kNames) {
    if (n == name) return key;
  }
  return std::nullopt;
}

bool is_conjecture(CheckId id) noexcept {
  return id == CheckId::conj_face_bounds || id == CheckId::conj_turan_comparison;
}

std::vector<CheckId> all_checks() {
  std::vector<CheckId> out;
  for (const auto& [key, name] : kNames) out.push_back(key);
  return out;
}

std::vector<CheckId> theorem_checks() {
  std::vector<CheckId> out;
  for (const auto& [key, name] : kNames) {
    if (!is_conjecture(key)) out.push_back(key);
  }
  return out;
}

std::vector<CheckId> conjecture_checks() { return {CheckId::conj_face_bounds, CheckId::conj_turan_comparison}; }

std::vector<CheckId> parse_check_list(std::string_view list) {
  if (list == "all") return all_checks();
  if (list == "theorems") return theorem_checks();
  if (list == "conjectures") return conjecture_checks();
  std::vector<CheckId> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto name = list.substr(0, comma);
    const auto id = parse_check_id(name);
    if (!id) throw Error(Errc::domain, "unknown check '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(Errc::domain, "empty check list");
  return out;
}

InstanceContext::InstanceContext(Instance instance) : instance_(std::move(instance)) {}

const FVector& InstanceContext::f() {
  if (!f_) f_ = f_vector(instance_.complex);
  return *f_;
}

const BettiVector& InstanceContext::betti(unsigned p) {
  auto it = betti_.find(p);
  if (it == betti_.end()) it = betti_.emplace(p, betti_vector(instance_.complex, PrimeField(p))).first;
  return it->second;
}

bool InstanceContext::is_flag() {
  if (!flag_) flag_ = instance_.graph.has_value() || flagcx::is_flag(instance_.complex);
  return *flag_;
}

const Graph& InstanceContext::graph() {
  if (!graph_) graph_ = underlying_graph(instance_.complex);
  return *graph_;
}

int InstanceContext::chromatic_number() {
  if (!chi_) chi_ = flagcx::chromatic_number(graph());
  return *chi_;
}

bool InstanceContext::is_balanced() { return chromatic_number() == complex().dim() + 1; }

int compare_with_root_power(const BigInt& f, const BigInt& c, const BigInt& a, int d, int i) {
  if (d < 1 || i < 0 || a < 0) throw Error(Errc::domain, "compare_with_root_power needs d >= 1, i >= 0, a >= 0");
  auto sign = [](const BigInt& x, const BigInt& y) { return x > y ? 1 : (x == y ? 0 : -1); };
  const auto ud = static_cast<unsigned>(d);
  const auto ui = static_cast<unsigned>(i);
  const BigInt root = iroot_floor(a, ud);
  if (ipow(root, ud) == a) return sign(f, c * ipow(root + 1, ui));
  // a^{1/d} is irrational, so the two sides never agree; bracket it in
  // [L, L+1) / 2^P and refine until the bracket decides.
  for (unsigned precision = 16; precision <= (1U << 16); precision *= 2) {
    const BigInt scale = BigInt(1) << precision;
    const BigInt low = iroot_floor(a << (precision * ud), ud);
    const BigInt lhs = f << (precision * ui);
    if (lhs >= c * ipow(low + 1 + scale, ui)) return 1;
    if (lhs <= c * ipow(low + scale, ui)) return -1;
  }
  throw Error(Errc::invariant, "root comparison undecided at maximum precision");
}

CheckReport run_check(CheckId id, InstanceContext& ctx, unsigned p, const CheckOptions& options) {
  CheckReport r;
  r.check = std::string(to_string(id));
  r.instance = ctx.instance().id;
  r.p = p;
  const auto& c = ctx.complex();
  if (c.dim() < 0) return skipped(std::move(r), "trivial complex");
  try {
    const int d = c.dim() + 1;
    switch (id) {
      case CheckId::zykov:
        return check_zykov(std::move(r), ctx);
      case CheckId::balanced_realization:
        return check_balanced_realization(std::move(r), ctx, p);
      case CheckId::flag_betti_bound:
        if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
        betti_bounds(r, ctx.f(), ctx.betti(p)(d - 1), d);
        return r;
      case CheckId::flag_face_bounds: {
        if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
        const auto a = ctx.betti(p)(d - 1);
        if (a == 0) return skipped(std::move(r), "top Betti number is zero");
        face_bounds(r, ctx.f(), a, d, true, Verdict::fail);
        return r;
      }
      case CheckId::turan_comparison: {
        if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
        const auto a = ctx.betti(p)(d - 1);
        if (a == 0) return skipped(std::move(r), "top Betti number is zero");
        return check_turan_comparison(std::move(r), ctx, a, d);
      }
      case CheckId::flag_f_polynomial:
        if (!ctx.is_flag()) return skipped(std::move(r), "not a flag complex");
        f_polynomial(r, ctx, ctx.betti(p)(d - 1), d);
        return r;
      case CheckId::meshulam:
        return check_meshulam(std::move(r), ctx, p);
      case CheckId::vertex_betti_split:
        return check_vertex_split(std::move(r), ctx, p);
      case CheckId::revlex_betti_max:
        return check_revlex_max(std::move(r), ctx, p);
      case CheckId::shifted_betti_formula:
        return check_shifted_formula(std::move(r), ctx, p);
      case CheckId::balanced_betti_bound:
        return check_balanced_betti(std::move(r), ctx, p);
      case CheckId::balanced_face_bounds: {
        const auto bd = balanced_d(ctx);
        if (!bd) return skipped(std::move(r), "not balanced");
        const auto a = ctx.betti(p)(*bd - 1);
        if (a == 0) return skipped(std::move(r), "top Betti number is zero");
        face_bounds(r, ctx.f(), a, *bd, true, Verdict::fail);
        return r;
      }
      case CheckId::balanced_f_polynomial: {
        const auto bd = balanced_d(ctx);
        if (!bd) return skipped(std::move(r), "not balanced");
        f_polynomial(r, ctx, ctx.betti(p)(*bd - 1), *bd);
        return r;
      }
      case CheckId::ffk_continuous:
        return check_ffk_continuous(std::move(r), ctx);
      case CheckId::conj_face_bounds:
        return check_conj_face_bounds(std::move(r), ctx, p, options.conjecture_k);
      case CheckId::conj_turan_comparison:
        return check_conj_turan(std::move(r), ctx, p, options.conjecture_k);
    }
  } catch (const Error& e) {
    // A broken construction or invariant inside a check is a failure of that
    // check on this instance, reported with the error text.
    r.verdict = Verdict::fail;
    r.note = e.what();
    return r;
  }
  return r;
}

}  // namespace flagcx
