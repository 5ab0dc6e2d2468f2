// sexpand: enumeration, resonance search, expansion and classification of
// finite abelian semigroups acting on Lie algebras.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sexpansion/sexpansion.hpp"

namespace {

using namespace sexpansion;

constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

// ---------------------------------------------------------------------------
// Shared input/output helpers

MultiplicationTable read_table(const std::string& path) {
  if (path == "-") return parse_table(std::cin);
  std::ifstream in(path);
  if (!in) throw IoError("cannot open table file: " + path);
  return parse_table(in);
}

LieAlgebra read_algebra(const std::string& source) {
  if (auto named = named_algebra(source)) return *named;
  if (source == "-") return parse_algebra(std::cin);
  return load_algebra(source);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write: " + out_path);
  out << text;
  if (!out) throw IoError("write failure: " + out_path);
}

std::vector<int> parse_index_set(const std::string& csv, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "expected comma-separated integers, got '" + csv + "'");
    }
  }
  if (out.empty())
    throw CLI::ValidationError(flag, "expected a nonempty index list");
  return out;
}

std::string yesno(bool v) { return v ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Flag bundles shared by several subcommands

struct TableArgs {
  std::string path;
  void attach(CLI::App* cmd) {
    cmd->add_option("--table", path, "table file (single-table format; '-' for stdin)")
        ->required();
  }
  MultiplicationTable load() const { return read_table(path); }
};

struct SplitArgs {
  std::string v0, v1;
  void attach(CLI::App* cmd) {
    cmd->add_option("--v0", v0, "generators of V0, e.g. 2 or 1,3");
    cmd->add_option("--v1", v1, "generators of V1");
  }
  bool given() const { return !v0.empty() || !v1.empty(); }
  SubspaceSplit parse() const {
    if (v0.empty() || v1.empty())
      throw CLI::ValidationError("--v0/--v1", "both halves of the split are required");
    return SubspaceSplit(parse_index_set(v0, "--v0"), parse_index_set(v1, "--v1"));
  }
};

struct DecompositionArgs {
  std::string s0, s1;
  int resonance_index = 0;  // 1-based into the sorted resonance list
  void attach(CLI::App* cmd) {
    cmd->add_option("--s0", s0, "semigroup elements of S0, e.g. 1,2");
    cmd->add_option("--s1", s1, "semigroup elements of S1");
    cmd->add_option("--resonance-index", resonance_index,
                    "pick the Nth resonance (1-based, sorted order) instead of --s0/--s1");
  }
  bool given() const { return !s0.empty() || !s1.empty() || resonance_index > 0; }
  ResonantDecomposition resolve(const MultiplicationTable& t) const {
    if (resonance_index > 0) {
      if (!s0.empty() || !s1.empty())
        throw CLI::ValidationError("--resonance-index", "cannot combine with --s0/--s1");
      auto all = find_all_resonances(t);
      if (resonance_index > static_cast<int>(all.size()))
        throw NotResonant("table has only " + std::to_string(all.size()) +
                          " resonances, index " + std::to_string(resonance_index) +
                          " requested");
      return all[resonance_index - 1];
    }
    if (s0.empty() || s1.empty())
      throw CLI::ValidationError("--s0/--s1", "both halves of the decomposition are required");
    return ResonantDecomposition(t.order(), parse_index_set(s0, "--s0"),
                                 parse_index_set(s1, "--s1"));
  }
};

// ---------------------------------------------------------------------------
// Subcommand implementations. Each returns the process exit code.

struct EnumerateCmd {
  int order = 0;
  bool abelian = false;
  bool with_zero = false, without_zero = false;
  std::string convention = "iso+anti";
  int jobs = 1;
  std::string out;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("enumerate",
                                   "list all non-equivalent semigroups of one order");
    cmd->add_option("--order", order, "semigroup order")->required();
    cmd->add_flag("--abelian", abelian, "commutative tables only");
    cmd->add_flag("--with-zero", with_zero, "only tables having a zero element");
    cmd->add_flag("--without-zero", without_zero, "only tables lacking a zero element");
    cmd->add_option("--convention", convention, "equivalence: iso or iso+anti (default)");
    cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    cmd->add_option("--out", out, "write the packed catalog here instead of stdout");
    cmd->callback([this] { run(); });
  }

  void run() const {
    if (with_zero && without_zero)
      throw CLI::ValidationError("--with-zero", "contradicts --without-zero");
    EnumerationFilter filter;
    if (abelian) filter.commutative = true;
    if (with_zero) filter.with_zero = true;
    if (without_zero) filter.with_zero = false;
    Convention conv = convention_from_string(convention);
    Catalog cat;
    cat.order = order;
    cat.convention = conv;
    cat.tables = enumerate(order, filter, conv, jobs);
    write_output(format_catalog(cat), out);
  }
};

struct CheckCmd {
  TableArgs table;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("check", "verify associativity and commutativity");
    table.attach(cmd);
    cmd->callback([this] { run(); });
  }

  void run() const {
    MultiplicationTable t = table.load();
    auto aw = associativity_witness(t);
    auto cw = commutativity_witness(t);
    std::string report = "order " + std::to_string(t.order()) + "\n";
    report += "associative " + yesno(!aw);
    if (aw)
      report += "  # (" + std::to_string(aw->a) + "*" + std::to_string(aw->b) + ")*" +
                std::to_string(aw->c) + " != " + std::to_string(aw->a) + "*(" +
                std::to_string(aw->b) + "*" + std::to_string(aw->c) + ")";
    report += "\ncommutative " + yesno(!cw);
    if (cw)
      report += "  # " + std::to_string(cw->a) + "*" + std::to_string(cw->b) + " != " +
                std::to_string(cw->b) + "*" + std::to_string(cw->a);
    report += "\n";
    std::cout << report;
    if (aw)
      throw NotAssociative("not associative; witness (" + std::to_string(aw->a) + "," +
                           std::to_string(aw->b) + "," + std::to_string(aw->c) + ")");
  }
};

struct ZeroCmd {
  TableArgs table;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("zero", "find the absorbing element, if any");
    table.attach(cmd);
    cmd->callback([this] { run(); });
  }

  void run() const {
    auto z = find_zero(table.load());
    if (z)
      std::cout << "zero " << *z << "\n";
    else
      std::cout << "zero none\n";
  }
};

struct ResonancesCmd {
  TableArgs table;
  DecompositionArgs decomposition;
  bool disjoint_only = false;
  bool count_only = false;
  int jobs = 1;
  std::string out;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "resonances", "list resonant decompositions, or check one given by --s0/--s1");
    table.attach(cmd);
    decomposition.attach(cmd);
    cmd->add_flag("--disjoint-only", disjoint_only, "require S0 and S1 disjoint");
    cmd->add_flag("--count-only", count_only, "print only the number of resonances");
    cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    cmd->add_option("--out", out, "write results here instead of stdout");
    cmd->callback([this] { run(); });
  }

  void run() const {
    MultiplicationTable t = table.load();
    if (decomposition.given()) {
      ResonantDecomposition d = decomposition.resolve(t);
      if (auto w = resonance_witness(t, d))
        throw NotResonant(format_decomposition(d) + " is not resonant: " + w->describe());
      write_output(format_decomposition(d) + " resonant\n", out);
      return;
    }
    auto all = find_all_resonances(t, {disjoint_only, jobs});
    if (count_only) {
      write_output(std::to_string(all.size()) + "\n", out);
      return;
    }
    std::string text;
    for (const auto& d : all) text += format_decomposition(d) + "\n";
    write_output(text, out);
  }
};

/// `expand` and `reduce` share everything but the default mode: expand
/// defaults to the full expansion (i), reduce to the 0_S-reduction (iii).
struct ExpandCmd {
  std::string name;
  ExpansionMode default_mode;
  std::string seed;
  TableArgs table;
  std::string mode_text;
  SplitArgs split;
  DecompositionArgs decomposition;
  std::string out;

  ExpandCmd(std::string name, ExpansionMode default_mode)
      : name(std::move(name)), default_mode(default_mode) {}

  void attach(CLI::App& app) {
    const std::string help =
        name == "expand" ? "build an expanded algebra (default mode i)"
                         : "build a reduced algebra (default mode iii)";
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--seed", seed, "seed algebra: sl2, so3, solv2, abelian:d, or a file")
        ->required();
    table.attach(cmd);
    cmd->add_option("--mode", mode_text,
                    "i = expansion, ii = resonant subalgebra, iii = 0-reduction, "
                    "iv = reduced resonant");
    split.attach(cmd);
    decomposition.attach(cmd);
    cmd->add_option("--out", out,
                    "write the algebra here (plus a .meta sidecar) instead of stdout");
    cmd->callback([this] { run(); });
  }

  void run() const {
    ExpansionMode mode = default_mode;
    if (!mode_text.empty()) {
      auto m = mode_from_string(mode_text);
      if (!m) throw CLI::ValidationError("--mode", "expected one of i, ii, iii, iv");
      mode = *m;
    }
    LieAlgebra seed_algebra = read_algebra(seed);
    MultiplicationTable t = table.load();

    const bool needs_resonance = mode == ExpansionMode::ResonantSubalgebra ||
                                 mode == ExpansionMode::ZeroReducedResonant;
    std::optional<SubspaceSplit> sp;
    std::optional<ResonantDecomposition> dec;
    if (needs_resonance) {
      if (!split.given())
        throw CLI::ValidationError("--v0/--v1", "mode " + std::string(to_roman(mode)) +
                                                    " needs a generator split");
      if (!decomposition.given())
        throw CLI::ValidationError("--s0/--s1",
                                   "mode " + std::string(to_roman(mode)) +
                                       " needs a resonance (--s0/--s1 or --resonance-index)");
      sp = split.parse();
      dec = decomposition.resolve(t);
    } else if (split.given() || decomposition.given()) {
      throw CLI::ValidationError("--mode", "split/resonance flags only apply to modes ii/iv");
    }

    LieAlgebra result = expansion_output(seed_algebra, t, mode, sp, dec);
    write_output(format_algebra(result), out);
    if (!out.empty()) {
      std::string meta = "# produced by sexpand " + name + "\n";
      meta += "seed " + seed + "\n";
      meta += "table " + table_digits(canonical_form(t)) + "\n";
      meta += "mode " + std::string(to_roman(mode)) + "\n";
      if (sp) {
        meta += "v0";
        for (int i : sp->v0) meta += " " + std::to_string(i);
        meta += "\nv1";
        for (int i : sp->v1) meta += " " + std::to_string(i);
        meta += "\n";
      }
      if (dec) meta += format_decomposition(*dec) + "\n";
      write_output(meta, out + ".meta");
    }
  }
};

struct ClassifyCmd {
  TableArgs table;
  bool disjoint_only = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("classify",
                                   "which expansion modes a semigroup supports");
    table.attach(cmd);
    cmd->add_flag("--disjoint-only", disjoint_only, "require S0 and S1 disjoint");
    cmd->callback([this] { run(); });
  }

  void run() const {
    MultiplicationTable t = table.load();
    ExpansionCapability cap = classify(t, {disjoint_only, 1});
    std::cout << "order " << t.order() << "\n";
    std::cout << "zero " << (cap.zero_element ? std::to_string(*cap.zero_element) : "none")
              << "\n";
    std::cout << "resonances " << cap.resonances.size() << "\n";
    std::cout << "types " << cap.supported_modes() << "\n";
  }
};

struct FingerprintCmd {
  std::string algebra;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("fingerprint",
                                   "dimension, Killing rank, series dims, center");
    cmd->add_option("--algebra", algebra,
                    "algebra: sl2, so3, solv2, abelian:d, or a file")
        ->required();
    cmd->callback([this] { run(); });
  }

  void run() const {
    Fingerprint f = fingerprint(read_algebra(algebra));
    std::cout << "dim " << f.dim << "\n";
    std::cout << "killing_rank " << f.killing_rank << "\n";
    std::cout << "semisimple " << yesno(f.semisimple) << "\n";
    std::cout << "derived_series_dims";
    for (int x : f.derived_series_dims) std::cout << " " << x;
    std::cout << "\nlower_central_dims";
    for (int x : f.lower_central_dims) std::cout << " " << x;
    std::cout << "\ncenter_dim " << f.center_dim << "\n";
  }
};

struct ReportCmd {
  std::string catalog_path;
  int order = 0;
  bool abelian = false;
  std::string seed;
  SplitArgs split;
  bool disjoint_only = false;
  bool per_resonance = false;
  int jobs = 1;
  std::string out;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("report", "classification CSV for a whole catalog");
    cmd->add_option("--catalog", catalog_path, "packed catalog file");
    cmd->add_option("--order", order, "enumerate this order instead of reading a catalog");
    cmd->add_flag("--abelian", abelian, "with --order: commutative tables only");
    cmd->add_option("--seed", seed, "semisimple seed algebra for the ss_* columns");
    split.attach(cmd);
    cmd->add_flag("--disjoint-only", disjoint_only, "require S0 and S1 disjoint");
    cmd->add_flag("--per-resonance", per_resonance,
                  "one row per resonance instead of the first only");
    cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    cmd->add_option("--out", out, "write the CSV here instead of stdout");
    cmd->callback([this] { run(); });
  }

  void run() const {
    if (catalog_path.empty() == (order == 0))
      throw CLI::ValidationError("--catalog", "give exactly one of --catalog or --order");
    Catalog cat;
    if (!catalog_path.empty()) {
      cat = load_catalog(catalog_path);
    } else {
      cat.order = order;
      EnumerationFilter filter;
      if (abelian) filter.commutative = true;
      cat.tables = enumerate(order, filter, cat.convention, jobs);
    }
    ClassifyOptions opt;
    if (!seed.empty()) opt.seed = read_algebra(seed);
    if (split.given()) opt.split = split.parse();
    opt.disjoint_only = disjoint_only;
    opt.per_resonance = per_resonance;
    opt.jobs = jobs;
    write_output(classification_csv(classify_catalog(cat, opt)), out);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-expansion toolkit: finite abelian semigroups acting on Lie algebras"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string("sexpand ") + kLibraryVersion +
                                        " (formats: table " +
                                        std::to_string(kTableFormatVersion) + ", catalog " +
                                        std::to_string(kCatalogFormatVersion) + ", algebra " +
                                        std::to_string(kAlgebraFormatVersion) + ")");

  EnumerateCmd enumerate_cmd;
  CheckCmd check_cmd;
  ZeroCmd zero_cmd;
  ResonancesCmd resonances_cmd;
  ExpandCmd expand_cmd("expand", sexpansion::ExpansionMode::Expanded);
  ExpandCmd reduce_cmd("reduce", sexpansion::ExpansionMode::ZeroReduced);
  ClassifyCmd classify_cmd;
  FingerprintCmd fingerprint_cmd;
  ReportCmd report_cmd;

  enumerate_cmd.attach(app);
  check_cmd.attach(app);
  zero_cmd.attach(app);
  resonances_cmd.attach(app);
  expand_cmd.attach(app);
  reduce_cmd.attach(app);
  classify_cmd.attach(app);
  fingerprint_cmd.attach(app);
  report_cmd.attach(app);

  try {
    app.parse(argc, argv);
    if (app.get_subcommands().empty()) {
      std::cout << app.help();
      return 0;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  } catch (const sexpansion::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}
