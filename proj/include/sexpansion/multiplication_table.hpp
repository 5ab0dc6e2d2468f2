#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sexpansion/error.hpp"

namespace sexpansion {

/// Cayley table of a finite magma on elements 1..n. Entry (a,b) is the
/// index of the product of elements a and b. Nothing beyond the index
/// range is assumed at construction: associativity and commutativity are
/// checked by the predicates below, never presupposed.
///
/// All element indices in the public API are 1-based.
class MultiplicationTable {
 public:
  MultiplicationTable(int order, std::vector<int> entries)
      : order_(order), entries_(std::move(entries)) {
    if (order_ < 1) throw ShapeMismatch("table order must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(order_) * order_)
      throw ShapeMismatch("expected " + std::to_string(order_ * order_) +
                          " entries, got " + std::to_string(entries_.size()));
    for (int a = 1; a <= order_; ++a)
      for (int b = 1; b <= order_; ++b) {
        int v = entries_[idx(a, b)];
        if (v < 1 || v > order_)
          throw EntryOutOfRange(a, b, v,
                                "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") = " + std::to_string(v) + " outside 1.." +
                                    std::to_string(order_));
      }
  }

  static MultiplicationTable from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw ShapeMismatch("table rows must form a square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return MultiplicationTable(static_cast<int>(rows.size()), std::move(flat));
  }

  int order() const { return order_; }

  /// Product of elements a and b (1-based).
  int operator()(int a, int b) const {
    assert(a >= 1 && a <= order_ && b >= 1 && b <= order_);
    return entries_[idx(a, b)];
  }

  /// Row-major flattened entries; the order used for all lexicographic
  /// comparisons and for the packed catalog format.
  const std::vector<int>& flattened() const { return entries_; }

  friend bool operator==(const MultiplicationTable& x, const MultiplicationTable& y) {
    return x.order_ == y.order_ && x.entries_ == y.entries_;
  }
  friend std::strong_ordering operator<=>(const MultiplicationTable& x,
                                          const MultiplicationTable& y) {
    if (auto c = x.order_ <=> y.order_; c != 0) return c;
    return x.entries_ <=> y.entries_;
  }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a - 1) * order_ + (b - 1);
  }

  int order_;
  std::vector<int> entries_;
};

struct TripleWitness {
  int a, b, c;
  friend bool operator==(const TripleWitness&, const TripleWitness&) = default;
};

struct PairWitness {
  int a, b;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// Returns the lexicographically first triple (a,b,c) with
/// (a*b)*c != a*(b*c), or nullopt if the table is associative.
inline std::optional<TripleWitness> associativity_witness(const MultiplicationTable& t) {
  int n = t.order();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return TripleWitness{a, b, c};
  return std::nullopt;
}

inline bool is_associative(const MultiplicationTable& t) {
  return !associativity_witness(t).has_value();
}

/// Returns the first pair (a,b) with a*b != b*a, or nullopt.
inline std::optional<PairWitness> commutativity_witness(const MultiplicationTable& t) {
  int n = t.order();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (t(a, b) != t(b, a)) return PairWitness{a, b};
  return std::nullopt;
}

inline bool is_commutative(const MultiplicationTable& t) {
  return !commutativity_witness(t).has_value();
}

/// The absorbing element z with a*z = z*a = z for all a, if present.
/// Two distinct absorbing elements cannot coexist (their product would
/// have to equal both), so the scan asserts uniqueness.
inline std::optional<int> find_zero(const MultiplicationTable& t) {
  int n = t.order();
  std::optional<int> zero;
  for (int z = 1; z <= n; ++z) {
    bool absorbing = true;
    for (int a = 1; a <= n && absorbing; ++a)
      absorbing = t(a, z) == z && t(z, a) == z;
    if (absorbing) {
      assert(!zero.has_value());
      zero = z;
    }
  }
  return zero;
}

/// Indicator tensor of the product: K(a,b,r) = 1 exactly when a*b = r.
/// For every pair (a,b) exactly one r has K(a,b,r) = 1.
class SelectorTensor {
 public:
  explicit SelectorTensor(const MultiplicationTable& t) : order_(t.order()) {
    k_.assign(static_cast<std::size_t>(order_) * order_ * order_, 0);
    for (int a = 1; a <= order_; ++a)
      for (int b = 1; b <= order_; ++b) k_[idx(a, b, t(a, b))] = 1;
  }

  int order() const { return order_; }

  int operator()(int a, int b, int r) const {
    assert(a >= 1 && a <= order_ && b >= 1 && b <= order_ && r >= 1 && r <= order_);
    return k_[idx(a, b, r)];
  }

 private:
  std::size_t idx(int a, int b, int r) const {
    return (static_cast<std::size_t>(a - 1) * order_ + (b - 1)) * order_ + (r - 1);
  }

  int order_;
  std::vector<std::uint8_t> k_;
};

inline SelectorTensor selector(const MultiplicationTable& t) { return SelectorTensor(t); }

/// Rebuilds the table a selector tensor came from.
inline MultiplicationTable table_from_selector(const SelectorTensor& k) {
  int n = k.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int r = 1; r <= n; ++r)
        if (k(a, b, r)) entries[static_cast<std::size_t>(a - 1) * n + (b - 1)] = r;
  return MultiplicationTable(n, std::move(entries));
}

/// Bijection on 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    int n = static_cast<int>(image_.size());
    if (n < 1) throw ShapeMismatch("permutation must move at least one point");
    std::vector<char> seen(n + 1, 0);
    for (int v : image_) {
      if (v < 1 || v > n || seen[v])
        throw ShapeMismatch("image array is not a permutation of 1.." + std::to_string(n));
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
  }

  int order() const { return static_cast<int>(image_.size()); }
  int operator()(int a) const { return image_[a - 1]; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int a = 1; a <= order(); ++a) inv[image_[a - 1] - 1] = a;
    return Permutation(std::move(inv));
  }

 private:
  std::vector<int> image_;
};

/// Relabels the table by p: result(p(a), p(b)) = p(t(a, b)). The result
/// is isomorphic to the input by construction.
inline MultiplicationTable apply_permutation(const MultiplicationTable& t,
                                             const Permutation& p) {
  if (p.order() != t.order())
    throw OrderMismatch("permutation order " + std::to_string(p.order()) +
                        " does not match table order " + std::to_string(t.order()));
  int n = t.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      entries[static_cast<std::size_t>(p(a) - 1) * n + (p(b) - 1)] = p(t(a, b));
  return MultiplicationTable(n, std::move(entries));
}

inline MultiplicationTable transpose(const MultiplicationTable& t) {
  int n = t.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) entries[static_cast<std::size_t>(a - 1) * n + (b - 1)] = t(b, a);
  return MultiplicationTable(n, std::move(entries));
}

// ---------------------------------------------------------------------------
// Single-table text format.
//
//   order n
//   <n rows of n whitespace-separated integers in 1..n>
//
// Lines starting with '#' are comments and may appear anywhere.
// ---------------------------------------------------------------------------

inline MultiplicationTable parse_table(std::istream& in) {
  std::string line;
  int lineno = 0;
  int order = -1;
  std::vector<int> entries;
  int rows_read = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    auto first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (sv[first] == '#') continue;
    std::istringstream ls(line);
    if (order < 0) {
      std::string kw;
      ls >> kw >> order;
      if (kw != "order" || ls.fail() || order < 1)
        throw ParseError(lineno, "expected header 'order n'");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens after 'order n'");
      continue;
    }
    if (rows_read == order) throw ParseError(lineno, "more rows than the declared order");
    for (int b = 0; b < order; ++b) {
      int v;
      if (!(ls >> v)) throw ParseError(lineno, "expected " + std::to_string(order) +
                                                   " integers in table row");
      entries.push_back(v);
    }
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens in table row");
    ++rows_read;
  }
  if (order < 0) throw ParseError(lineno, "missing 'order n' header");
  if (rows_read != order)
    throw ParseError(lineno, "expected " + std::to_string(order) + " rows, got " +
                                 std::to_string(rows_read));
  try {
    return MultiplicationTable(order, std::move(entries));
  } catch (const EntryOutOfRange& e) {
    throw ParseError(lineno, e.what());
  }
}

inline MultiplicationTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

inline std::string format_table(const MultiplicationTable& t) {
  std::ostringstream out;
  out << "order " << t.order() << "\n";
  for (int a = 1; a <= t.order(); ++a) {
    for (int b = 1; b <= t.order(); ++b) {
      if (b > 1) out << ' ';
      out << t(a, b);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sexpansion
