#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sexpansion/multiplication_table.hpp"

namespace sexpansion {

/// Ordered decomposition S = S0 ∪ S1 (possibly overlapping, both nonempty).
/// S0 pairs with the V0 generator subspace and S1 with V1, so (S0,S1) and
/// (S1,S0) are distinct decompositions.
struct ResonantDecomposition {
  int order = 0;
  std::vector<int> s0, s1;  // ascending 1-based element indices

  ResonantDecomposition() = default;
  ResonantDecomposition(int n, std::vector<int> s0_, std::vector<int> s1_)
      : order(n), s0(std::move(s0_)), s1(std::move(s1_)) {
    normalize_and_validate();
  }

  std::uint64_t s0_mask() const { return to_mask(s0); }
  std::uint64_t s1_mask() const { return to_mask(s1); }

  bool contains0(int e) const { return std::binary_search(s0.begin(), s0.end(), e); }
  bool contains1(int e) const { return std::binary_search(s1.begin(), s1.end(), e); }

  friend bool operator==(const ResonantDecomposition&,
                         const ResonantDecomposition&) = default;

  static std::uint64_t to_mask(const std::vector<int>& v) {
    std::uint64_t m = 0;
    for (int e : v) m |= std::uint64_t{1} << (e - 1);
    return m;
  }
  static std::vector<int> from_mask(std::uint64_t m) {
    std::vector<int> v;
    for (int e = 1; m; ++e, m >>= 1)
      if (m & 1) v.push_back(e);
    return v;
  }

 private:
  void normalize_and_validate() {
    std::sort(s0.begin(), s0.end());
    std::sort(s1.begin(), s1.end());
    s0.erase(std::unique(s0.begin(), s0.end()), s0.end());
    s1.erase(std::unique(s1.begin(), s1.end()), s1.end());
    if (order < 1)
      throw InvalidDecomposition("decomposition order must be >= 1");
    if (s0.empty() || s1.empty())
      throw InvalidDecomposition("S0 and S1 must both be nonempty");
    for (int e : s0)
      if (e < 1 || e > order)
        throw InvalidDecomposition("S0 element " + std::to_string(e) +
                                   " outside 1.." + std::to_string(order));
    for (int e : s1)
      if (e < 1 || e > order)
        throw InvalidDecomposition("S1 element " + std::to_string(e) +
                                   " outside 1.." + std::to_string(order));
    std::uint64_t full = order >= 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << order) - 1;
    if ((to_mask(s0) | to_mask(s1)) != full)
      throw InvalidDecomposition("S0 and S1 must cover every element");
  }
};

/// `S0={1,2} S1={1,3}`
inline std::string format_decomposition(const ResonantDecomposition& d) {
  auto set = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s + "}";
  };
  return "S0=" + set(d.s0) + " S1=" + set(d.s1);
}

/// First failing product of the three containments S0·S0 ⊆ S0,
/// S0·S1 ⊆ S1, S1·S1 ⊆ S0.
struct ResonanceViolation {
  int lhs_subset;  // 0 or 1: the subset alpha ranges over
  int rhs_subset;  // 0 or 1: the subset beta ranges over
  int target_subset;
  int alpha, beta, product;

  std::string describe() const {
    auto name = [](int s) { return s == 0 ? "S0" : "S1"; };
    return std::string(name(lhs_subset)) + "*" + name(rhs_subset) + ": " +
           std::to_string(alpha) + "*" + std::to_string(beta) + " = " +
           std::to_string(product) + " not in " + name(target_subset);
  }
};

namespace detail {

inline void require_abelian_semigroup(const MultiplicationTable& t) {
  if (auto w = associativity_witness(t))
    throw NotAssociative("table is not associative; witness (" +
                         std::to_string(w->a) + "," + std::to_string(w->b) + "," +
                         std::to_string(w->c) + ")");
  if (auto w = commutativity_witness(t))
    throw NotAbelian("table is not commutative; witness (" +
                     std::to_string(w->a) + "," + std::to_string(w->b) + ")");
}

}  // namespace detail

/// Empty result means d is resonant for t.
inline std::optional<ResonanceViolation> resonance_witness(
    const MultiplicationTable& t, const ResonantDecomposition& d) {
  detail::require_abelian_semigroup(t);
  if (d.order != t.order())
    throw OrderMismatch("decomposition order " + std::to_string(d.order) +
                        " vs table order " + std::to_string(t.order()));
  struct Containment {
    const std::vector<int>*lhs, *rhs;
    int li, ri, ti;
    bool (ResonantDecomposition::*target)(int) const;
  };
  auto in0 = &ResonantDecomposition::contains0;
  auto in1 = &ResonantDecomposition::contains1;
  const Containment checks[3] = {
      {&d.s0, &d.s0, 0, 0, 0, in0},
      {&d.s0, &d.s1, 0, 1, 1, in1},
      {&d.s1, &d.s1, 1, 1, 0, in0},
  };
  for (const auto& c : checks)
    for (int a : *c.lhs)
      for (int b : *c.rhs) {
        int p = t(a, b);
        if (!(d.*c.target)(p))
          return ResonanceViolation{c.li, c.ri, c.ti, a, b, p};
      }
  return std::nullopt;
}

inline bool check_resonance(const MultiplicationTable& t,
                            const ResonantDecomposition& d) {
  return !resonance_witness(t, d).has_value();
}

struct ResonanceSearchOptions {
  bool disjoint_only = false;
  int jobs = 1;
};

/// Largest order find_all_resonances accepts: the pair scan is Θ(3^n) and
/// element sets are held in 64-bit masks.
inline constexpr int kResonanceOrderCap = 32;

/// All resonant decompositions of an abelian semigroup, sorted by
/// (S0, S1) read as bitmask integers (bit e−1 ⇔ element e).
inline std::vector<ResonantDecomposition> find_all_resonances(
    const MultiplicationTable& t, const ResonanceSearchOptions& options = {}) {
  detail::require_abelian_semigroup(t);
  const int n = t.order();
  if (n > kResonanceOrderCap)
    throw OrderTooLarge(n, kResonanceOrderCap,
                        "resonance search supports order <= " +
                            std::to_string(kResonanceOrderCap));
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  // product_bit[a][b] = bitmask of the single product element.
  std::vector<std::uint64_t> product_bit(static_cast<std::size_t>(n) * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      product_bit[(a - 1) * n + b - 1] = std::uint64_t{1} << (t(a, b) - 1);
  auto product_mask = [&](std::uint64_t am, std::uint64_t bm) {
    std::uint64_t out = 0;
    for (std::uint64_t x = am; x; x &= x - 1) {
      int a = std::countr_zero(x);
      for (std::uint64_t y = bm; y; y &= y - 1)
        out |= product_bit[a * n + std::countr_zero(y)];
    }
    return out;
  };

  auto scan_range = [&](std::uint64_t m0_begin, std::uint64_t m0_end,
                        std::vector<std::pair<std::uint64_t, std::uint64_t>>& out) {
    for (std::uint64_t m0 = m0_begin; m0 < m0_end; ++m0) {
      if (!m0) continue;
      if (product_mask(m0, m0) & ~m0) continue;  // S0·S0 ⊆ S0 is S1-free
      const std::uint64_t required = full & ~m0;
      // S1 = required ∪ extra for every subset `extra` of S0.
      std::uint64_t extra = options.disjoint_only ? 0 : m0;
      for (;;) {
        std::uint64_t m1 = required | extra;
        if (m1 && !(product_mask(m0, m1) & ~m1) && !(product_mask(m1, m1) & ~m0))
          out.emplace_back(m0, m1);
        if (!extra) break;
        extra = (extra - 1) & m0;
      }
    }
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  int jobs = options.jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency())
                               : options.jobs;
  if (jobs < 2 || full <= 4096) {
    scan_range(1, full + 1, pairs);
  } else {
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> parts(jobs);
    std::vector<std::thread> threads;
    std::uint64_t chunk = full / jobs + 1;
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back([&, w] {
        std::uint64_t lo = 1 + w * chunk;
        std::uint64_t hi = std::min(full + 1, lo + chunk);
        if (lo < hi) scan_range(lo, hi, parts[w]);
      });
    for (auto& th : threads) th.join();
    for (auto& p : parts) pairs.insert(pairs.end(), p.begin(), p.end());
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<ResonantDecomposition> out;
  out.reserve(pairs.size());
  for (auto [m0, m1] : pairs)
    out.emplace_back(n, ResonantDecomposition::from_mask(m0),
                     ResonantDecomposition::from_mask(m1));
  return out;
}

/// The four algebras obtainable from an expansion, in the order they are
/// usually listed (i–iv).
enum class ExpansionMode { Expanded, ResonantSubalgebra, ZeroReduced, ZeroReducedResonant };

inline const char* to_roman(ExpansionMode m) {
  switch (m) {
    case ExpansionMode::Expanded: return "i";
    case ExpansionMode::ResonantSubalgebra: return "ii";
    case ExpansionMode::ZeroReduced: return "iii";
    case ExpansionMode::ZeroReducedResonant: return "iv";
  }
  return "?";
}

inline std::optional<ExpansionMode> mode_from_string(const std::string& s) {
  if (s == "i" || s == "1") return ExpansionMode::Expanded;
  if (s == "ii" || s == "2") return ExpansionMode::ResonantSubalgebra;
  if (s == "iii" || s == "3") return ExpansionMode::ZeroReduced;
  if (s == "iv" || s == "4") return ExpansionMode::ZeroReducedResonant;
  return std::nullopt;
}

/// Which of the four expansion modes a semigroup admits: the expanded
/// algebra always exists, the resonant subalgebra needs a resonance, the
/// 0_S-reduction needs a zero element, and their combination needs both.
struct ExpansionCapability {
  bool has_zero = false;
  std::optional<int> zero_element;
  std::vector<ResonantDecomposition> resonances;

  bool supports(ExpansionMode m) const {
    switch (m) {
      case ExpansionMode::Expanded: return true;
      case ExpansionMode::ResonantSubalgebra: return !resonances.empty();
      case ExpansionMode::ZeroReduced: return has_zero;
      case ExpansionMode::ZeroReducedResonant: return has_zero && !resonances.empty();
    }
    return false;
  }

  /// `i;ii;iii` — the supported subset, semicolon-joined.
  std::string supported_modes() const {
    std::string out;
    for (ExpansionMode m : {ExpansionMode::Expanded, ExpansionMode::ResonantSubalgebra,
                            ExpansionMode::ZeroReduced, ExpansionMode::ZeroReducedResonant})
      if (supports(m)) {
        if (!out.empty()) out += ';';
        out += to_roman(m);
      }
    return out;
  }
};

inline ExpansionCapability classify(const MultiplicationTable& t,
                                    const ResonanceSearchOptions& options = {}) {
  ExpansionCapability cap;
  cap.zero_element = find_zero(t);
  cap.has_zero = cap.zero_element.has_value();
  cap.resonances = find_all_resonances(t, options);
  return cap;
}

}  // namespace sexpansion
