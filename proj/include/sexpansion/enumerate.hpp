#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "sexpansion/canonical.hpp"
#include "sexpansion/multiplication_table.hpp"

namespace sexpansion {

/// Largest order enumerate() accepts. Order 6 runs at desk scale; order 7
/// is supported but a full (non-commutative) sweep takes hours.
inline constexpr int kEnumerationOrderCap = 7;

/// Associativity is always required. `commutative`/`with_zero` restrict the
/// output to tables that have (true) or lack (false) the property.
struct EnumerationFilter {
  std::optional<bool> commutative;
  std::optional<bool> with_zero;
};

namespace detail {

inline constexpr int kMaxEnumN = kEnumerationOrderCap;

struct EnumContext {
  int n = 0;
  int ncells = 0;                 // positions to fill
  bool triangle = false;          // commutative mode: fill a<=b, mirror the rest
  bool with_transpose = true;     // convention includes anti-isomorphism
  std::optional<bool> commutative_filter;
  std::optional<bool> zero_filter;
  std::array<std::int8_t, kMaxEnumN * kMaxEnumN> pos_row{}, pos_col{};
  std::array<bool, kMaxEnumN * kMaxEnumN> canon_check_after{};
  std::vector<std::array<std::int8_t, kMaxEnumN>> perms, pinvs;
};

inline EnumContext make_enum_context(int n, const EnumerationFilter& filter,
                                     Convention conv) {
  EnumContext ctx;
  ctx.n = n;
  ctx.triangle = filter.commutative.value_or(false);
  ctx.with_transpose = conv == Convention::IsoAndAntiIso;
  ctx.commutative_filter = filter.commutative;
  ctx.zero_filter = filter.with_zero;
  int k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = ctx.triangle ? a : 0; b < n; ++b) {
      ctx.pos_row[k] = static_cast<std::int8_t>(a);
      ctx.pos_col[k] = static_cast<std::int8_t>(b);
      ++k;
    }
  ctx.ncells = k;
  // Canonicity rejection runs on every cell of the first row, where it cuts
  // the deepest, then once per completed row.
  for (int i = 0; i < k; ++i) {
    bool last_in_row = i + 1 == k || ctx.pos_row[i + 1] != ctx.pos_row[i];
    ctx.canon_check_after[i] = ctx.pos_row[i] == 0 || last_in_row;
  }
  std::array<std::int8_t, kMaxEnumN> perm{};
  for (int i = 0; i < n; ++i) perm[i] = static_cast<std::int8_t>(i);
  do {
    ctx.perms.push_back(perm);
    std::array<std::int8_t, kMaxEnumN> pinv{};
    for (int i = 0; i < n; ++i) pinv[perm[i]] = static_cast<std::int8_t>(i);
    ctx.pinvs.push_back(pinv);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return ctx;
}

/// One backtracking search over partially filled tables. Cells hold values
/// 1..n, 0 meaning unassigned.
struct EnumSearch {
  const EnumContext* ctx;
  std::array<std::int8_t, kMaxEnumN * kMaxEnumN> cell{};

  int at(int a, int b) const { return cell[a * ctx->n + b]; }
  void set(int a, int b, std::int8_t v) { cell[a * ctx->n + b] = v; }

  bool triple_ok(int a, int b, int c) const {
    int ab = at(a, b);
    if (!ab) return true;
    int bc = at(b, c);
    if (!bc) return true;
    int l = at(ab - 1, c), r = at(a, bc - 1);
    return !l || !r || l == r;
  }

  /// Checks every associativity triple whose evaluation the assignment of
  /// cell (x,y) could have completed.
  bool assoc_ok_after(int x, int y) const {
    const int n = ctx->n;
    for (int c = 0; c < n; ++c)
      if (!triple_ok(x, y, c)) return false;
    for (int a = 0; a < n; ++a)
      if (!triple_ok(a, x, y)) return false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int v = at(a, b);
        if (!v) continue;
        if (v == x + 1 && !triple_ok(a, b, y)) return false;
        if (v == y + 1 && !triple_ok(x, a, b)) return false;
      }
    return true;
  }

  /// <0 if the relabeled (optionally transposed) table is lexicographically
  /// smaller than the current one on the defined prefix, 0 if provably
  /// equal on the full table, >0 if larger or indeterminate.
  int compare_prefix(const std::int8_t* perm, const std::int8_t* pinv, bool tr) const {
    const int n = ctx->n;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int cur = at(a, b);
        if (!cur) return 1;
        int src = tr ? at(pinv[b], pinv[a]) : at(pinv[a], pinv[b]);
        if (!src) return 1;
        int v = perm[src - 1] + 1;
        if (v != cur) return v < cur ? -1 : 1;
      }
    return 0;
  }

  /// True if some relabeling already beats this prefix, i.e. no completion
  /// of it can be canonical. On a complete table this is exactly the
  /// negation of canonicity.
  bool dominated() const {
    const auto& P = ctx->perms;
    for (std::size_t pi = 0; pi < P.size(); ++pi) {
      const std::int8_t* perm = P[pi].data();
      const std::int8_t* pinv = ctx->pinvs[pi].data();
      if (pi != 0 && compare_prefix(perm, pinv, false) < 0) return true;
      if (ctx->with_transpose && compare_prefix(perm, pinv, true) < 0) return true;
    }
    return false;
  }

  bool leaf_passes_filters() const {
    const int n = ctx->n;
    if (!ctx->triangle && ctx->commutative_filter.has_value()) {
      bool comm = true;
      for (int a = 0; a < n && comm; ++a)
        for (int b = a + 1; b < n && comm; ++b) comm = at(a, b) == at(b, a);
      if (comm != *ctx->commutative_filter) return false;
    }
    if (ctx->zero_filter.has_value()) {
      bool has_zero = false;
      for (int z = 0; z < n && !has_zero; ++z) {
        bool absorbing = true;
        for (int a = 0; a < n && absorbing; ++a)
          absorbing = at(a, z) == z + 1 && at(z, a) == z + 1;
        has_zero = absorbing;
      }
      if (has_zero != *ctx->zero_filter) return false;
    }
    return true;
  }

  template <typename Emit>
  void run(int pos, Emit&& emit) {
    if (pos == ctx->ncells) {
      if (!dominated() && leaf_passes_filters()) emit(cell);
      return;
    }
    int a = ctx->pos_row[pos], b = ctx->pos_col[pos];
    bool mirror = ctx->triangle && a != b;
    for (int v = 1; v <= ctx->n; ++v) {
      set(a, b, static_cast<std::int8_t>(v));
      if (mirror) set(b, a, static_cast<std::int8_t>(v));
      bool ok = assoc_ok_after(a, b) && (!mirror || assoc_ok_after(b, a));
      if (ok && ctx->canon_check_after[pos] && pos + 1 != ctx->ncells) ok = !dominated();
      if (ok) run(pos + 1, emit);
    }
    set(a, b, 0);
    if (mirror) set(b, a, 0);
  }
};

}  // namespace detail

/// Enumerates all pairwise non-equivalent associative tables of the given
/// order that match the filter, as canonical forms sorted by row-major
/// flattening. Cell-by-cell backtracking with incremental associativity
/// checks and canonicity rejection on prefixes; subtrees rooted at complete
/// first rows may run on `jobs` worker threads, with identical output for
/// any job count.
inline std::vector<MultiplicationTable> enumerate(
    int order, const EnumerationFilter& filter = {},
    Convention conv = Convention::IsoAndAntiIso, int jobs = 1) {
  if (order < 1) throw ShapeMismatch("enumeration order must be >= 1");
  if (order > kEnumerationOrderCap)
    throw OrderTooLarge(order, kEnumerationOrderCap,
                        "enumeration supports order <= " +
                            std::to_string(kEnumerationOrderCap) + ", got " +
                            std::to_string(order));
  detail::EnumContext ctx = detail::make_enum_context(order, filter, conv);

  // Seed tasks: every surviving assignment of the first fill-order row.
  int seed_depth = 0;
  while (seed_depth < ctx.ncells && ctx.pos_row[seed_depth] == 0) ++seed_depth;
  std::vector<detail::EnumSearch> tasks;
  std::vector<std::vector<int>> results;
  {
    // run() bounded to seed_depth: treat it as the leaf level. dominated()
    // at the truncated leaf is still a valid prefix check; the real leaf
    // filters only apply to complete tables, so they are cleared here.
    detail::EnumContext seed_ctx = ctx;
    seed_ctx.ncells = seed_depth;
    seed_ctx.commutative_filter.reset();
    seed_ctx.zero_filter.reset();
    detail::EnumSearch seeder{&seed_ctx};
    seeder.run(0, [&](const auto& cells) {
      detail::EnumSearch s{&ctx};
      s.cell = cells;
      tasks.push_back(s);
    });
  }

  std::mutex result_mutex;
  std::atomic<std::size_t> next_task{0};
  int nworkers = jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency()) : jobs;
  if (nworkers < 1) nworkers = 1;
  if (static_cast<std::size_t>(nworkers) > tasks.size())
    nworkers = static_cast<int>(std::max<std::size_t>(tasks.size(), 1));

  auto worker = [&]() {
    std::vector<std::vector<int>> local;
    for (;;) {
      std::size_t i = next_task.fetch_add(1);
      if (i >= tasks.size()) break;
      detail::EnumSearch s = tasks[i];
      s.run(seed_depth, [&](const auto& cells) {
        std::vector<int> flat(static_cast<std::size_t>(order) * order);
        for (std::size_t q = 0; q < flat.size(); ++q) flat[q] = cells[q];
        local.push_back(std::move(flat));
      });
    }
    std::lock_guard<std::mutex> lock(result_mutex);
    for (auto& f : local) results.push_back(std::move(f));
  };

  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < nworkers; ++w) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  std::sort(results.begin(), results.end());
  std::vector<MultiplicationTable> out;
  out.reserve(results.size());
  for (auto& f : results) out.emplace_back(order, std::move(f));
  return out;
}

}  // namespace sexpansion
