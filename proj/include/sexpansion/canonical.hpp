#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sexpansion/multiplication_table.hpp"

namespace sexpansion {

/// Which relabelings count as "the same" structure. Under IsoAndAntiIso a
/// table and its transpose are equivalent; for commutative tables the two
/// conventions coincide.
enum class Convention { IsoOnly, IsoAndAntiIso };

inline std::string to_string(Convention c) {
  return c == Convention::IsoOnly ? "iso" : "iso+anti";
}

inline Convention convention_from_string(const std::string& s) {
  if (s == "iso") return Convention::IsoOnly;
  if (s == "iso+anti") return Convention::IsoAndAntiIso;
  throw ParseError(0, "unknown convention '" + s + "' (expected 'iso' or 'iso+anti')");
}

namespace detail {

/// Compares the relabeled table p(t(p⁻¹(a), p⁻¹(b))) — transposed first if
/// requested — against `ref`, walking cells in row-major order. Entries are
/// 0-based here. Returns <0, 0, >0 like memcmp.
inline int compare_variant(int n, const std::int8_t* t0, const std::int8_t* perm,
                           const std::int8_t* pinv, bool transposed, const std::int8_t* ref) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int sa = pinv[a], sb = pinv[b];
      int src = transposed ? t0[sb * n + sa] : t0[sa * n + sb];
      int v = perm[src];
      int r = ref[a * n + b];
      if (v != r) return v < r ? -1 : 1;
    }
  }
  return 0;
}

/// Runs fn(perm, pinv) for every permutation of 0..n-1, identity first.
/// fn returning false stops the scan early.
template <typename Fn>
inline void for_each_permutation(int n, Fn&& fn) {
  std::vector<std::int8_t> perm(n), pinv(n);
  std::iota(perm.begin(), perm.end(), static_cast<std::int8_t>(0));
  do {
    for (int i = 0; i < n; ++i) pinv[perm[i]] = static_cast<std::int8_t>(i);
    if (!fn(perm.data(), pinv.data())) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<std::int8_t> to_zero_based(const MultiplicationTable& t) {
  std::vector<std::int8_t> e(t.flattened().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = static_cast<std::int8_t>(t.flattened()[i] - 1);
  return e;
}

}  // namespace detail

/// The distinguished representative of the table's equivalence class: the
/// lexicographically smallest row-major flattening over all relabelings,
/// and additionally over the transpose under IsoAndAntiIso. Idempotent;
/// two tables are equivalent iff their canonical forms are equal.
///
/// Cost is factorial in the order; fine for the small orders catalogs use.
inline MultiplicationTable canonical_form(const MultiplicationTable& t,
                                          Convention conv = Convention::IsoAndAntiIso) {
  int n = t.order();
  std::vector<std::int8_t> t0 = detail::to_zero_based(t);
  std::vector<std::int8_t> best = t0;
  std::vector<std::int8_t> scratch(t0.size());
  bool with_transpose = conv == Convention::IsoAndAntiIso;
  detail::for_each_permutation(n, [&](const std::int8_t* perm, const std::int8_t* pinv) {
    for (int transposed = 0; transposed <= (with_transpose ? 1 : 0); ++transposed) {
      if (detail::compare_variant(n, t0.data(), perm, pinv, transposed, best.data()) < 0) {
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            int sa = pinv[a], sb = pinv[b];
            int src = transposed ? t0[sb * n + sa] : t0[sa * n + sb];
            scratch[a * n + b] = perm[src];
          }
        best = scratch;
      }
    }
    return true;
  });
  std::vector<int> entries(best.size());
  for (std::size_t i = 0; i < best.size(); ++i) entries[i] = best[i] + 1;
  return MultiplicationTable(n, std::move(entries));
}

/// True iff t equals its own canonical form. Cheaper than building the
/// form: bails out at the first strictly smaller variant.
inline bool is_canonical(const MultiplicationTable& t,
                         Convention conv = Convention::IsoAndAntiIso) {
  int n = t.order();
  std::vector<std::int8_t> t0 = detail::to_zero_based(t);
  bool with_transpose = conv == Convention::IsoAndAntiIso;
  bool canonical = true;
  detail::for_each_permutation(n, [&](const std::int8_t* perm, const std::int8_t* pinv) {
    for (int transposed = 0; transposed <= (with_transpose ? 1 : 0); ++transposed) {
      if (detail::compare_variant(n, t0.data(), perm, pinv, transposed, t0.data()) < 0) {
        canonical = false;
        return false;
      }
    }
    return true;
  });
  return canonical;
}

}  // namespace sexpansion
