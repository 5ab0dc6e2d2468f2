#pragma once

#include <array>
#include <atomic>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sexpansion/canonical.hpp"
#include "sexpansion/expansion.hpp"
#include "sexpansion/lie_algebra.hpp"
#include "sexpansion/multiplication_table.hpp"
#include "sexpansion/resonance.hpp"

namespace sexpansion {

/// Packed catalogs hold one table per line as n² digits, so orders beyond
/// 9 are out of scope for this format.
inline constexpr int kCatalogOrderCap = 9;

/// An ordered collection of canonical tables of one order, as produced by
/// enumerate(): canonical under `convention`, sorted, duplicate-free.
struct Catalog {
  int order = 1;
  Convention convention = Convention::IsoAndAntiIso;
  std::vector<MultiplicationTable> tables;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

/// `111123132` — the row-major digit string of a table (order ≤ 9).
inline std::string table_digits(const MultiplicationTable& t) {
  if (t.order() > kCatalogOrderCap)
    throw OrderTooLarge(t.order(), kCatalogOrderCap,
                        "digit form needs order <= " + std::to_string(kCatalogOrderCap));
  std::string s;
  s.reserve(static_cast<std::size_t>(t.order()) * t.order());
  for (int v : t.flattened()) s += static_cast<char>('0' + v);
  return s;
}

/// Catalogs load/save in a packed text format:
///
///   # order 3 count 12
///   # convention iso+anti
///   111111111
///   111111112
///   ...
///
/// Other `#` lines are comments. Loading validates what the catalog
/// invariants promise: header count, associativity, strict sorted order,
/// and — for orders small enough to afford the n! scan everywhere, ≤ 4 —
/// canonicity under the declared convention.
inline Catalog load_catalog(std::istream& in) {
  std::string line;
  int lineno = 0;
  Catalog cat;
  std::optional<long long> expected;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string word;
      ls >> word;
      if (!header_seen) {
        if (word != "order") throw ParseError(lineno, "expected header `# order n count m`");
        int n;
        long long m;
        std::string countword, junk;
        if (!(ls >> n >> countword >> m) || countword != "count" || n < 1)
          throw ParseError(lineno, "expected header `# order n count m`");
        if (ls >> junk) throw ParseError(lineno, "trailing tokens in header");
        if (n > kCatalogOrderCap)
          throw ParseError(lineno, "packed catalogs support order <= " +
                                       std::to_string(kCatalogOrderCap));
        cat.order = n;
        expected = m;
        header_seen = true;
      } else if (word == "convention") {
        std::string tag;
        if (!(ls >> tag)) throw ParseError(lineno, "missing convention tag");
        try {
          cat.convention = convention_from_string(tag);
        } catch (const ParseError& pe) {
          throw ParseError(lineno, pe.what());
        }
      }
      continue;
    }
    if (!header_seen) throw ParseError(lineno, "table line before `# order n count m` header");
    const int n = cat.order;
    if (static_cast<int>(line.size()) != n * n)
      throw ParseError(lineno, "expected " + std::to_string(n * n) + " digits, got " +
                                   std::to_string(line.size()));
    std::vector<int> entries;
    entries.reserve(line.size());
    for (char ch : line) {
      if (ch < '1' || ch > '9')
        throw ParseError(lineno, std::string("bad digit '") + ch + "'");
      int v = ch - '0';
      if (v > n)
        throw ParseError(lineno, "entry " + std::to_string(v) + " exceeds order " +
                                     std::to_string(n));
      entries.push_back(v);
    }
    MultiplicationTable t(n, std::move(entries));
    if (auto w = associativity_witness(t))
      throw NotAssociative("table at line " + std::to_string(lineno) +
                           " is not associative; witness (" + std::to_string(w->a) + "," +
                           std::to_string(w->b) + "," + std::to_string(w->c) + ")");
    if (!cat.tables.empty() && !(cat.tables.back().flattened() < t.flattened()))
      throw ParseError(lineno, "catalog tables must be strictly ascending");
    if (cat.order <= 4 && !is_canonical(t, cat.convention))
      throw ParseError(lineno, "table is not canonical under convention " +
                                   to_string(cat.convention));
    cat.tables.push_back(std::move(t));
  }
  if (!header_seen) throw ParseError(lineno, "missing `# order n count m` header");
  if (expected && static_cast<long long>(cat.tables.size()) != *expected)
    throw CountMismatch("header promises " + std::to_string(*expected) + " tables, found " +
                        std::to_string(cat.tables.size()));
  return cat;
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open catalog file: " + path);
  return load_catalog(in);
}

inline std::string format_catalog(const Catalog& c) {
  std::string out = "# order " + std::to_string(c.order) + " count " +
                    std::to_string(c.tables.size()) + "\n";
  out += "# convention " + to_string(c.convention) + "\n";
  for (const auto& t : c.tables) {
    if (t.order() != c.order)
      throw OrderMismatch("catalog of order " + std::to_string(c.order) +
                          " contains a table of order " + std::to_string(t.order()));
    out += table_digits(t) + "\n";
  }
  return out;
}

inline void save_catalog(const Catalog& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write catalog file: " + path);
  out << format_catalog(c);
  if (!out) throw IoError("write failure: " + path);
}

// ---------------------------------------------------------------------------
// Batch classification

/// One report line: which expansion modes the table supports, plus — when
/// a semisimple seed was supplied — whether each supported mode preserves
/// semisimplicity. Modes ii/iv are evaluated against `resonance` (the
/// first in sorted order unless per-resonance output was requested).
struct ClassificationRow {
  int id = 0;  // 1-based position in the catalog
  int order = 0;
  bool abelian = false;
  bool has_zero = false;
  int n_resonances = 0;
  std::string types;                         // e.g. "i;ii;iii;iv"; empty if not abelian
  std::array<std::optional<bool>, 4> ss{};   // indexed by mode i..iv
  std::string table;                         // canonical digit form
  std::optional<ResonantDecomposition> resonance;
};

struct ClassifyOptions {
  std::optional<LieAlgebra> seed;
  std::optional<SubspaceSplit> split;
  bool disjoint_only = false;
  /// One row per resonance (same id) instead of one row per table.
  bool per_resonance = false;
  int jobs = 1;
};

namespace detail {

inline std::vector<ClassificationRow> classify_one(const MultiplicationTable& t, int id,
                                                   const ClassifyOptions& opt,
                                                   bool seed_semisimple) {
  ClassificationRow base;
  base.id = id;
  base.order = t.order();
  base.table = table_digits(t);
  base.abelian = is_commutative(t);
  base.has_zero = find_zero(t).has_value();
  if (!base.abelian) return {base};  // expansion needs an abelian semigroup

  ExpansionCapability cap = classify(t, {opt.disjoint_only, 1});
  base.n_resonances = static_cast<int>(cap.resonances.size());
  base.types = cap.supported_modes();

  const bool score = opt.seed.has_value() && seed_semisimple;
  if (score) {
    base.ss[0] = preserves_semisimplicity(*opt.seed, t, ExpansionMode::Expanded);
    if (cap.has_zero)
      base.ss[2] = preserves_semisimplicity(*opt.seed, t, ExpansionMode::ZeroReduced);
  }

  auto resonant_scores = [&](ClassificationRow& row, const ResonantDecomposition& d) {
    row.resonance = d;
    if (!score || !opt.split) return;
    row.ss[1] = preserves_semisimplicity(*opt.seed, t, ExpansionMode::ResonantSubalgebra,
                                         opt.split, d);
    if (cap.has_zero)
      row.ss[3] = preserves_semisimplicity(*opt.seed, t,
                                           ExpansionMode::ZeroReducedResonant, opt.split, d);
  };

  if (cap.resonances.empty()) return {base};
  if (!opt.per_resonance) {
    resonant_scores(base, cap.resonances.front());
    return {base};
  }
  std::vector<ClassificationRow> rows;
  rows.reserve(cap.resonances.size());
  for (const auto& d : cap.resonances) {
    ClassificationRow row = base;
    resonant_scores(row, d);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// One row per table in catalog order (or one per resonance with
/// per_resonance). Rows are independent, so workers may split the catalog;
/// output order never depends on scheduling.
inline std::vector<ClassificationRow> classify_catalog(const Catalog& c,
                                                       const ClassifyOptions& opt = {}) {
  bool seed_semisimple = false;
  if (opt.seed) {
    if (opt.split) opt.split->validate(opt.seed->dim());
    seed_semisimple = is_semisimple(*opt.seed);
  }
  const int nt = static_cast<int>(c.tables.size());
  std::vector<std::vector<ClassificationRow>> per_table(nt);
  int jobs = opt.jobs <= 0 ? static_cast<int>(std::thread::hardware_concurrency())
                           : opt.jobs;
  if (jobs < 2 || nt < 2) {
    for (int i = 0; i < nt; ++i)
      per_table[i] = detail::classify_one(c.tables[i], i + 1, opt, seed_semisimple);
  } else {
    std::vector<std::thread> threads;
    std::atomic<int> next{0};
    int nworkers = std::min(jobs, nt);
    for (int w = 0; w < nworkers; ++w)
      threads.emplace_back([&] {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= nt) break;
          per_table[i] = detail::classify_one(c.tables[i], i + 1, opt, seed_semisimple);
        }
      });
    for (auto& th : threads) th.join();
  }
  std::vector<ClassificationRow> rows;
  for (auto& part : per_table)
    for (auto& r : part) rows.push_back(std::move(r));
  return rows;
}

/// CSV report. The first ten columns are the classification proper; the
/// last two make rows self-identifying: the table's canonical digit form
/// (ids are catalog ordinals, which other tools may not share) and the
/// resonance behind ss_ii/ss_iv.
inline std::string classification_csv(const std::vector<ClassificationRow>& rows) {
  std::string out = "id,order,abelian,has_zero,n_resonances,types,ss_i,ss_ii,ss_iii,ss_iv,table,resonance\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : rows) {
    out += std::to_string(r.id) + "," + std::to_string(r.order) + "," + b(r.abelian) +
           "," + b(r.has_zero) + "," + std::to_string(r.n_resonances) + "," + r.types;
    for (const auto& s : r.ss) {
      out += ",";
      if (s) out += b(*s);
    }
    out += "," + r.table + ",";
    if (r.resonance) out += "\"" + format_decomposition(*r.resonance) + "\"";
    out += "\n";
  }
  return out;
}

}  // namespace sexpansion
