#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sexpansion/error.hpp"
#include "sexpansion/linalg.hpp"
#include "sexpansion/rational.hpp"

namespace sexpansion {

/// Largest supported algebra dimension. Dense d³ rational storage: a
/// dim-10 seed expanded by an order-6 semigroup (d = 60) fits comfortably.
inline constexpr int kDimCap = 64;

struct BracketEntry {
  int i, j, k;
  Rational coeff;  // C^k_{ij}
};

/// Finite-dimensional algebra over the rationals given by structure
/// constants C^k_{ij} with antisymmetry enforced at construction. Whether
/// the Jacobi identity holds is a property to check, not an invariant, so
/// raw tensors (e.g. freshly expanded ones) can be validated after the
/// fact. Dimension 0 is legal; it shows up as a fully reduced algebra.
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim, std::vector<std::string> labels = {})
      : dim_(dim), labels_(std::move(labels)) {
    if (dim < 0) throw ShapeMismatch("algebra dimension must be >= 0");
    if (dim > kDimCap)
      throw OrderTooLarge(dim, kDimCap, "algebra dimension " + std::to_string(dim) +
                                            " exceeds cap " + std::to_string(kDimCap));
    if (!labels_.empty() && static_cast<int>(labels_.size()) != dim)
      throw ShapeMismatch("expected " + std::to_string(dim) + " labels, got " +
                          std::to_string(labels_.size()));
    c_.resize(static_cast<std::size_t>(dim) * dim * dim);
  }

  int dim() const { return dim_; }

  /// C^k_{ij}, all indices 1-based.
  const Rational& c(int i, int j, int k) const { return c_[index(i, j, k)]; }

  const std::vector<std::string>& labels() const { return labels_; }

  /// Display label: the stored one, or `Xi` when none were given.
  std::string label(int i) const {
    if (i < 1 || i > dim_) throw IndexOutOfRange("generator index " + std::to_string(i));
    if (labels_.empty()) return "X" + std::to_string(i);
    return labels_[i - 1];
  }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_)
      throw IndexOutOfRange("structure-constant index (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) +
                            ") outside 1.." + std::to_string(dim_));
    return (static_cast<std::size_t>(i - 1) * dim_ + (j - 1)) * dim_ + (k - 1);
  }

  int dim_;
  std::vector<Rational> c_;
  std::vector<std::string> labels_;

  friend LieAlgebra new_algebra(int, const std::vector<BracketEntry>&,
                                std::vector<std::string>);
};

/// Builds an algebra from bracket data, filling in C^k_{ji} = −C^k_{ij}.
/// Both orientations may be supplied if they agree; contradictory or
/// nonzero diagonal entries are rejected.
inline LieAlgebra new_algebra(int dim, const std::vector<BracketEntry>& brackets,
                              std::vector<std::string> labels = {}) {
  LieAlgebra a(dim, std::move(labels));
  std::vector<char> seen(a.c_.size(), 0);  // keyed by the i<j orientation
  for (const auto& e : brackets) {
    if (e.i < 1 || e.i > dim || e.j < 1 || e.j > dim || e.k < 1 || e.k > dim)
      throw IndexOutOfRange("bracket (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + "," + std::to_string(e.k) +
                            ") outside 1.." + std::to_string(dim));
    if (e.i == e.j) {
      if (e.coeff != 0)
        throw AntisymmetryConflict("C^" + std::to_string(e.k) + "_{" +
                                   std::to_string(e.i) + "," + std::to_string(e.j) +
                                   "} must vanish: [X,X] = 0");
      continue;
    }
    int i = e.i, j = e.j;
    Rational v = e.coeff;
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    std::size_t idx = a.index(i, j, e.k);
    if (seen[idx] && a.c_[idx] != v)
      throw AntisymmetryConflict("conflicting values for C^" + std::to_string(e.k) +
                                 "_{" + std::to_string(e.i) + "," +
                                 std::to_string(e.j) + "}");
    seen[idx] = 1;
    a.c_[idx] = v;
    a.c_[a.index(j, i, e.k)] = -v;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Axioms

struct JacobiWitness {
  int i, j, k;
  friend bool operator==(const JacobiWitness&, const JacobiWitness&) = default;
};

/// First triple i<j<k where the cyclic sum
/// Σ_m (C^m_{ij}C^l_{mk} + C^m_{jk}C^l_{mi} + C^m_{ki}C^l_{mj}) fails to
/// vanish for some l. By antisymmetry, triples with repeated indices and
/// non-ascending orderings hold automatically, so this scan is complete.
inline std::optional<JacobiWitness> jacobi_witness(const LieAlgebra& a) {
  const int d = a.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = j + 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          Rational sum = 0;
          for (int m = 1; m <= d; ++m) {
            Rational term = a.c(i, j, m) * a.c(m, k, l);
            term += a.c(j, k, m) * a.c(m, i, l);
            term += a.c(k, i, m) * a.c(m, j, l);
            sum += term;
          }
          if (sum != 0) return JacobiWitness{i, j, k};
        }
  return std::nullopt;
}

inline bool check_jacobi(const LieAlgebra& a) { return !jacobi_witness(a).has_value(); }

// ---------------------------------------------------------------------------
// Subspace structure

/// Disjoint split of the generators: V0 ⊔ V1 = {1..dim}, both parts
/// nonempty. Unlike semigroup decompositions, no overlap is allowed — the
/// split describes a direct sum.
struct SubspaceSplit {
  std::vector<int> v0, v1;  // ascending 1-based generator indices

  SubspaceSplit() = default;
  SubspaceSplit(std::vector<int> v0_, std::vector<int> v1_)
      : v0(std::move(v0_)), v1(std::move(v1_)) {
    std::sort(v0.begin(), v0.end());
    std::sort(v1.begin(), v1.end());
  }

  /// Throws BadPartition unless this is a valid split of 1..dim.
  void validate(int dim) const {
    if (v0.empty() || v1.empty())
      throw BadPartition("V0 and V1 must both be nonempty");
    std::vector<char> where(static_cast<std::size_t>(dim) + 1, 0);
    auto place = [&](const std::vector<int>& v, char tag) {
      for (int i : v) {
        if (i < 1 || i > dim)
          throw BadPartition("generator " + std::to_string(i) + " outside 1.." +
                             std::to_string(dim));
        if (where[i])
          throw BadPartition("generator " + std::to_string(i) +
                             " listed twice in the split");
        where[i] = tag;
      }
    };
    place(v0, 1);
    place(v1, 2);
    for (int i = 1; i <= dim; ++i)
      if (!where[i])
        throw BadPartition("generator " + std::to_string(i) + " missing from the split");
  }

  /// 0 or 1 for members; assumes validate() passed.
  int side(int i) const {
    return std::binary_search(v0.begin(), v0.end(), i) ? 0 : 1;
  }

  friend bool operator==(const SubspaceSplit&, const SubspaceSplit&) = default;
};

struct StructureViolation {
  int i, j, k;  // C^k_{ij} ≠ 0 lands outside the required part
  friend bool operator==(const StructureViolation&, const StructureViolation&) = default;
};

/// Checks [V0,V0] ⊂ V0, [V0,V1] ⊂ V1, [V1,V1] ⊂ V0: a nonzero C^k_{ij}
/// must satisfy side(k) = side(i) XOR side(j).
inline std::optional<StructureViolation> subspace_structure_witness(
    const LieAlgebra& a, const SubspaceSplit& s) {
  s.validate(a.dim());
  const int d = a.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        if (a.c(i, j, k) != 0 && s.side(k) != (s.side(i) ^ s.side(j)))
          return StructureViolation{i, j, k};
  return std::nullopt;
}

inline bool check_subspace_structure(const LieAlgebra& a, const SubspaceSplit& s) {
  return !subspace_structure_witness(a, s).has_value();
}

// ---------------------------------------------------------------------------
// Killing form and invariants

/// κ_{ij} = Σ_{m,n} C^m_{in} C^n_{jm} (the trace form of the adjoint
/// representation), always symmetric.
inline RationalMatrix killing_form(const LieAlgebra& a) {
  const int d = a.dim();
  RationalMatrix k(d, d);
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      Rational sum = 0;
      for (int m = 1; m <= d; ++m)
        for (int n = 1; n <= d; ++n) {
          Rational term = a.c(i, n, m) * a.c(j, m, n);
          sum += term;
        }
      k.at(i, j) = sum;
      k.at(j, i) = sum;
    }
  return k;
}

/// Cartan criterion: nonsingular Killing form. The Jacobi identity is a
/// precondition — the criterion means nothing on a non-Lie tensor.
inline bool is_semisimple(const LieAlgebra& a) {
  if (auto w = jacobi_witness(a))
    throw NotALieAlgebra("Jacobi identity fails at (" + std::to_string(w->i) + "," +
                         std::to_string(w->j) + "," + std::to_string(w->k) + ")");
  Rational det = exact_det(killing_form(a));
  return det != 0;
}

// ---------------------------------------------------------------------------
// Fingerprint

struct Fingerprint {
  int dim = 0;
  int killing_rank = 0;
  bool semisimple = false;
  std::vector<int> derived_series_dims;
  std::vector<int> lower_central_dims;
  int center_dim = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

namespace detail {

/// Coordinates of [u,v] given coordinate rows u, v.
inline std::vector<Rational> bracket_vector(const LieAlgebra& a,
                                            const std::vector<Rational>& u,
                                            const std::vector<Rational>& v) {
  const int d = a.dim();
  std::vector<Rational> w(d);
  for (int i = 1; i <= d; ++i) {
    if (u[i - 1] == 0) continue;
    for (int j = 1; j <= d; ++j) {
      if (v[j - 1] == 0) continue;
      Rational uv = u[i - 1] * v[j - 1];
      for (int k = 1; k <= d; ++k) {
        const Rational& c = a.c(i, j, k);
        if (c != 0) w[k - 1] += uv * c;
      }
    }
  }
  return w;
}

/// Basis of span{[u,v] : u ∈ ubasis, v ∈ vbasis}.
inline std::vector<std::vector<Rational>> bracket_span(
    const LieAlgebra& a, const std::vector<std::vector<Rational>>& ubasis,
    const std::vector<std::vector<Rational>>& vbasis) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& u : ubasis)
    for (const auto& v : vbasis) {
      auto w = bracket_vector(a, u, v);
      bool nonzero = false;
      for (const Rational& x : w)
        if (x != 0) {
          nonzero = true;
          break;
        }
      if (nonzero) rows.push_back(std::move(w));
    }
  if (rows.empty()) return {};
  return row_space_basis(RationalMatrix::from_rows(rows));
}

inline std::vector<std::vector<Rational>> identity_basis(int d) {
  std::vector<std::vector<Rational>> basis(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i) basis[i][i] = 1;
  return basis;
}

/// Appends subspace dimensions until the series dies (0) or stabilizes
/// (first repeated value is kept, then the list stops).
template <typename Next>
std::vector<int> series_dims(int d, std::vector<std::vector<Rational>> basis,
                             Next&& next) {
  std::vector<int> dims{d};
  if (d == 0) return dims;
  for (;;) {
    basis = next(basis);
    int nd = static_cast<int>(basis.size());
    dims.push_back(nd);
    if (nd == 0 || nd == dims[dims.size() - 2]) return dims;
  }
}

}  // namespace detail

/// Dimensions of the derived series G ⊇ [G,G] ⊇ [[G,G],[G,G]] ⊇ …
inline std::vector<int> derived_series_dims(const LieAlgebra& a) {
  return detail::series_dims(a.dim(), detail::identity_basis(a.dim()),
                             [&](const auto& b) { return detail::bracket_span(a, b, b); });
}

/// Dimensions of the lower central series G ⊇ [G,G] ⊇ [G,[G,G]] ⊇ …
inline std::vector<int> lower_central_dims(const LieAlgebra& a) {
  auto full = detail::identity_basis(a.dim());
  return detail::series_dims(a.dim(), full,
                             [&](const auto& b) { return detail::bracket_span(a, full, b); });
}

/// dim of {x : [x, G] = 0}: the null space of the d×d² matrix
/// A[i][(j,k)] = C^k_{ij}.
inline int center_dim(const LieAlgebra& a) {
  const int d = a.dim();
  if (d == 0) return 0;
  RationalMatrix m(d, d * d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) m.at(i, (j - 1) * d + k) = a.c(i, j, k);
  return d - exact_rank(m);
}

inline Fingerprint fingerprint(const LieAlgebra& a) {
  if (auto w = jacobi_witness(a))
    throw NotALieAlgebra("Jacobi identity fails at (" + std::to_string(w->i) + "," +
                         std::to_string(w->j) + "," + std::to_string(w->k) + ")");
  Fingerprint f;
  f.dim = a.dim();
  RationalMatrix kappa = killing_form(a);
  f.killing_rank = exact_rank(kappa);
  Rational det = exact_det(kappa);
  f.semisimple = det != 0;
  f.derived_series_dims = derived_series_dims(a);
  f.lower_central_dims = lower_central_dims(a);
  f.center_dim = center_dim(a);
  return f;
}

// ---------------------------------------------------------------------------
// Bundled algebras

/// `sl2` ([H,E]=2E, [H,F]=−2F, [E,F]=H), `so3` (cyclic [X1,X2]=X3, …),
/// `solv2` ([X1,X2]=X1), `abelian:d`.
inline std::optional<LieAlgebra> named_algebra(const std::string& name) {
  if (name == "sl2")
    return new_algebra(3,
                       {{1, 2, 2, Rational(2)},
                        {1, 3, 3, Rational(-2)},
                        {2, 3, 1, Rational(1)}},
                       {"H", "E", "F"});
  if (name == "so3")
    return new_algebra(3,
                       {{1, 2, 3, Rational(1)},
                        {2, 3, 1, Rational(1)},
                        {3, 1, 2, Rational(1)}},
                       {"X1", "X2", "X3"});
  if (name == "solv2")
    return new_algebra(2, {{1, 2, 1, Rational(1)}}, {"X1", "X2"});
  if (name.rfind("abelian:", 0) == 0) {
    const std::string num = name.substr(8);
    if (num.empty() || num.size() > 4 ||
        num.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    int d = std::stoi(num);
    if (d > kDimCap) throw OrderTooLarge(d, kDimCap, "abelian:" + num + " exceeds dimension cap");
    std::vector<std::string> labels;
    for (int i = 1; i <= d; ++i) labels.push_back("X" + std::to_string(i));
    return LieAlgebra(d, std::move(labels));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format
//
//   dim 3
//   labels H E F
//   1 2 2 2
//   1 3 3 -2
//   2 3 1 1
//
// `dim d` first; optional `labels` line with d whitespace-free tokens;
// then one line per bracket `i j k p/q` (the antisymmetric partner is
// implied). `#` starts a comment.

inline LieAlgebra parse_algebra(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<int> dim;
  std::vector<std::string> labels;
  std::vector<BracketEntry> entries;
  bool saw_bracket = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!dim) {
      if (first != "dim") throw ParseError(lineno, "expected `dim d` first");
      int d;
      if (!(ls >> d) || d < 0) throw ParseError(lineno, "bad dimension");
      std::string junk;
      if (ls >> junk) throw ParseError(lineno, "trailing tokens after dimension");
      dim = d;
      continue;
    }
    if (first == "labels") {
      if (!labels.empty()) throw ParseError(lineno, "duplicate labels line");
      if (saw_bracket) throw ParseError(lineno, "labels must precede brackets");
      std::string tok;
      while (ls >> tok) labels.push_back(tok);
      if (static_cast<int>(labels.size()) != *dim)
        throw ParseError(lineno, "expected " + std::to_string(*dim) + " labels, got " +
                                     std::to_string(labels.size()));
      continue;
    }
    BracketEntry e;
    std::string coeff;
    std::istringstream bs(line);
    if (!(bs >> e.i >> e.j >> e.k >> coeff))
      throw ParseError(lineno, "expected `i j k coefficient`");
    std::string junk;
    if (bs >> junk) throw ParseError(lineno, "trailing tokens after bracket");
    try {
      e.coeff = parse_rational(coeff);
    } catch (const ParseError& pe) {
      throw ParseError(lineno, pe.what());
    }
    saw_bracket = true;
    entries.push_back(std::move(e));
  }
  if (!dim) throw ParseError(lineno, "missing `dim d` line");
  try {
    return new_algebra(*dim, entries, std::move(labels));
  } catch (const Error& err) {
    throw ParseError(lineno, std::string("invalid algebra: ") + err.what());
  }
}

inline LieAlgebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

/// Deterministic writer: brackets with i < j and nonzero coefficient, in
/// ascending (i,j,k) order. parse_algebra(format_algebra(a)) == a.
inline std::string format_algebra(const LieAlgebra& a) {
  std::string out = "dim " + std::to_string(a.dim()) + "\n";
  if (!a.labels().empty()) {
    out += "labels";
    for (const auto& l : a.labels()) out += " " + l;
    out += "\n";
  }
  for (int i = 1; i <= a.dim(); ++i)
    for (int j = i + 1; j <= a.dim(); ++j)
      for (int k = 1; k <= a.dim(); ++k)
        if (a.c(i, j, k) != 0)
          out += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) +
                 " " + format_rational(a.c(i, j, k)) + "\n";
  return out;
}

inline LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open algebra file: " + path);
  return parse_algebra(in);
}

inline void save_algebra(const LieAlgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write algebra file: " + path);
  out << format_algebra(a);
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace sexpansion
