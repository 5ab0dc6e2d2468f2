#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sexpansion/lie_algebra.hpp"
#include "sexpansion/multiplication_table.hpp"
#include "sexpansion/resonance.hpp"

namespace sexpansion {

struct ExpandedBasisIndex {
  int i;      // seed generator, 1..d
  int alpha;  // semigroup element, 1..n
  int flat;   // (alpha−1)·d + i, 1..n·d
  friend bool operator==(const ExpandedBasisIndex&, const ExpandedBasisIndex&) = default;
};

/// The expanded algebra together with the bookkeeping needed to keep
/// talking about generators as (seed generator, semigroup element) pairs.
/// Flat indices are α-major: the seed block for each semigroup element is
/// contiguous.
class ExpandedAlgebra {
 public:
  ExpandedAlgebra(LieAlgebra algebra, LieAlgebra seed, MultiplicationTable table)
      : algebra_(std::move(algebra)), seed_(std::move(seed)), table_(std::move(table)) {}

  const LieAlgebra& algebra() const { return algebra_; }
  const LieAlgebra& seed() const { return seed_; }
  const MultiplicationTable& table() const { return table_; }

  int seed_dim() const { return seed_.dim(); }
  int semigroup_order() const { return table_.order(); }

  int flat(int i, int alpha) const {
    const int d = seed_dim();
    if (i < 1 || i > d)
      throw IndexOutOfRange("seed generator " + std::to_string(i) + " outside 1.." +
                            std::to_string(d));
    if (alpha < 1 || alpha > semigroup_order())
      throw IndexOutOfRange("semigroup element " + std::to_string(alpha) +
                            " outside 1.." + std::to_string(semigroup_order()));
    return (alpha - 1) * d + i;
  }

  ExpandedBasisIndex unflat(int flat) const {
    const int d = seed_dim();
    if (flat < 1 || flat > algebra_.dim())
      throw IndexOutOfRange("flat index " + std::to_string(flat) + " outside 1.." +
                            std::to_string(algebra_.dim()));
    int alpha = (flat - 1) / d + 1;
    int i = (flat - 1) % d + 1;
    return ExpandedBasisIndex{i, alpha, flat};
  }

 private:
  LieAlgebra algebra_;
  LieAlgebra seed_;
  MultiplicationTable table_;
};

/// Step I: G_S = S ⊗ G with constants C_(i,α)(j,β)^(k,γ) = K^γ_{αβ}·C^k_{ij}.
/// The table must be an abelian semigroup (commutativity is what makes the
/// expanded constants antisymmetric) and the seed a genuine Lie algebra.
/// With the order-1 semigroup the seed comes back unchanged, labels and all.
inline ExpandedAlgebra expand(const LieAlgebra& seed, const MultiplicationTable& t) {
  detail::require_abelian_semigroup(t);
  if (auto w = jacobi_witness(seed))
    throw NotALieAlgebra("seed fails the Jacobi identity at (" + std::to_string(w->i) +
                         "," + std::to_string(w->j) + "," + std::to_string(w->k) + ")");
  const int d = seed.dim();
  const int n = t.order();
  if (n == 1) return ExpandedAlgebra(seed, seed, t);

  std::vector<BracketEntry> entries;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n) * d);
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int i = 1; i <= d; ++i)
      labels.push_back("(X" + std::to_string(i) + ",L" + std::to_string(alpha) + ")");

  auto flat = [d](int i, int alpha) { return (alpha - 1) * d + i; };
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int beta = 1; beta <= n; ++beta) {
      const int gamma = t(alpha, beta);
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
          for (int k = 1; k <= d; ++k) {
            const Rational& c = seed.c(i, j, k);
            if (c != 0)
              entries.push_back({flat(i, alpha), flat(j, beta), flat(k, gamma), c});
          }
    }
  LieAlgebra expanded = new_algebra(n * d, entries, std::move(labels));
  return ExpandedAlgebra(std::move(expanded), seed, t);
}

namespace detail {

/// Restriction of the expanded algebra to a subset of flat generators.
/// Bracket components on dropped generators are either zeroed (indices in
/// `zeroed_ok`, the 0_S sector) or forbidden (ClosureViolation).
inline LieAlgebra restrict_expanded(const ExpandedAlgebra& e,
                                    const std::vector<int>& retained_flats,
                                    const std::vector<char>& zeroed_ok) {
  const LieAlgebra& big = e.algebra();
  const int m = static_cast<int>(retained_flats.size());
  std::vector<int> new_index(static_cast<std::size_t>(big.dim()) + 1, 0);
  for (int idx = 0; idx < m; ++idx) new_index[retained_flats[idx]] = idx + 1;

  std::vector<std::string> labels;
  labels.reserve(m);
  for (int f : retained_flats) labels.push_back(big.label(f));

  std::vector<BracketEntry> entries;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const int fa = retained_flats[a], fb = retained_flats[b];
      for (int g = 1; g <= big.dim(); ++g) {
        const Rational& c = big.c(fa, fb, g);
        if (c == 0) continue;
        if (new_index[g])
          entries.push_back({a + 1, b + 1, new_index[g], c});
        else if (!zeroed_ok[g]) {
          auto gi = e.unflat(g);
          throw ClosureViolation("bracket [" + big.label(fa) + "," + big.label(fb) +
                                 "] has a component on dropped generator " +
                                 big.label(gi.flat));
        }
      }
    }
  return new_algebra(m, entries, std::move(labels));
}

}  // namespace detail

/// Step II: the resonant subalgebra (S0 ⊗ V0) ⊕ (S1 ⊗ V1). Requires the
/// split to satisfy the subspace structure on the seed and the
/// decomposition to be resonant for the table; under those preconditions
/// the retained generators close under the bracket.
inline LieAlgebra resonant_subalgebra(const ExpandedAlgebra& e, const SubspaceSplit& split,
                                      const ResonantDecomposition& d) {
  if (auto w = subspace_structure_witness(e.seed(), split))
    throw BadSubspaceStructure("split violates the subspace structure at C^" +
                               std::to_string(w->k) + "_{" + std::to_string(w->i) + "," +
                               std::to_string(w->j) + "}");
  if (auto w = resonance_witness(e.table(), d))
    throw NotResonant("decomposition is not resonant: " + w->describe());

  std::vector<int> retained;
  for (int alpha : d.s0)
    for (int i : split.v0) retained.push_back(e.flat(i, alpha));
  for (int alpha : d.s1)
    for (int i : split.v1) retained.push_back(e.flat(i, alpha));
  std::sort(retained.begin(), retained.end());
  // V0 ∩ V1 = ∅, so overlapping S0 ∩ S1 elements never produce duplicates.
  std::vector<char> zeroed(static_cast<std::size_t>(e.algebra().dim()) + 1, 0);
  return detail::restrict_expanded(e, retained, zeroed);
}

/// Step III: remove the 0_S ⊗ G sector and zero every bracket landing in
/// it. The result is a Lie algebra of dimension (n−1)·d but in general not
/// a subalgebra of the expansion.
inline LieAlgebra zero_reduce(const ExpandedAlgebra& e) {
  auto z = find_zero(e.table());
  if (!z) throw NoZeroElement("the semigroup has no zero element");
  std::vector<int> retained;
  std::vector<char> zeroed(static_cast<std::size_t>(e.algebra().dim()) + 1, 0);
  for (int alpha = 1; alpha <= e.semigroup_order(); ++alpha)
    for (int i = 1; i <= e.seed_dim(); ++i) {
      int f = e.flat(i, alpha);
      if (alpha == *z)
        zeroed[f] = 1;
      else
        retained.push_back(f);
    }
  return detail::restrict_expanded(e, retained, zeroed);
}

/// Step II + III: 0_S-reduction of the resonant subalgebra. Retains
/// resonant generators outside the zero sector; brackets landing in the
/// zero sector are zeroed, non-retained nonzero-sector components are a
/// closure violation.
inline LieAlgebra zero_reduced_resonant(const ExpandedAlgebra& e,
                                        const SubspaceSplit& split,
                                        const ResonantDecomposition& d) {
  auto z = find_zero(e.table());
  if (!z) throw NoZeroElement("the semigroup has no zero element");
  if (auto w = subspace_structure_witness(e.seed(), split))
    throw BadSubspaceStructure("split violates the subspace structure at C^" +
                               std::to_string(w->k) + "_{" + std::to_string(w->i) + "," +
                               std::to_string(w->j) + "}");
  if (auto w = resonance_witness(e.table(), d))
    throw NotResonant("decomposition is not resonant: " + w->describe());

  std::vector<int> retained;
  for (int alpha : d.s0)
    if (alpha != *z)
      for (int i : split.v0) retained.push_back(e.flat(i, alpha));
  for (int alpha : d.s1)
    if (alpha != *z)
      for (int i : split.v1) retained.push_back(e.flat(i, alpha));
  std::sort(retained.begin(), retained.end());
  std::vector<char> zeroed(static_cast<std::size_t>(e.algebra().dim()) + 1, 0);
  for (int i = 1; i <= e.seed_dim(); ++i) zeroed[e.flat(i, *z)] = 1;
  return detail::restrict_expanded(e, retained, zeroed);
}

/// The algebra a given mode produces; split/decomposition are consulted
/// only for the modes that need them.
inline LieAlgebra expansion_output(const LieAlgebra& seed, const MultiplicationTable& t,
                                   ExpansionMode mode,
                                   const std::optional<SubspaceSplit>& split = {},
                                   const std::optional<ResonantDecomposition>& d = {}) {
  ExpandedAlgebra e = expand(seed, t);
  switch (mode) {
    case ExpansionMode::Expanded:
      return e.algebra();
    case ExpansionMode::ResonantSubalgebra:
      if (!split || !d)
        throw InvalidDecomposition("the resonant subalgebra needs a split and a decomposition");
      return resonant_subalgebra(e, *split, *d);
    case ExpansionMode::ZeroReduced:
      return zero_reduce(e);
    case ExpansionMode::ZeroReducedResonant:
      if (!split || !d)
        throw InvalidDecomposition("the reduced resonant algebra needs a split and a decomposition");
      return zero_reduced_resonant(e, *split, *d);
  }
  throw Error("unknown expansion mode");
}

/// Whether the given mode's output is semisimple, for a semisimple seed.
inline bool preserves_semisimplicity(const LieAlgebra& seed, const MultiplicationTable& t,
                                     ExpansionMode mode,
                                     const std::optional<SubspaceSplit>& split = {},
                                     const std::optional<ResonantDecomposition>& d = {}) {
  if (!is_semisimple(seed))
    throw NotSemisimple("seed algebra is not semisimple");
  return is_semisimple(expansion_output(seed, t, mode, split, d));
}

}  // namespace sexpansion
