#include <catch2/catch_amalgamated.hpp>

#include "sexpansion/enumerate.hpp"
#include "sexpansion/resonance.hpp"
#include "oracles.hpp"

using namespace sexpansion;

namespace {

MultiplicationTable s12() { return oracles::table_from_digits("111123132"); }

// λα·λβ = λ_min(α+β−1, n): associative, commutative, λn absorbing.
MultiplicationTable truncated_addition(int n) {
  std::vector<int> e;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) e.push_back(std::min(a + b - 1, n));
  return MultiplicationTable(n, std::move(e));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> as_masks(
    const std::vector<ResonantDecomposition>& ds) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& d : ds) out.emplace_back(d.s0_mask(), d.s1_mask());
  return out;
}

}  // namespace

TEST_CASE("decompositions normalize and validate") {
  ResonantDecomposition d(3, {2, 1, 2}, {3, 1});
  REQUIRE(d.s0 == std::vector<int>{1, 2});
  REQUIRE(d.s1 == std::vector<int>{1, 3});
  REQUIRE(d.s0_mask() == 0b011);
  REQUIRE(d.s1_mask() == 0b101);
  REQUIRE(d.contains0(2));
  REQUIRE_FALSE(d.contains0(3));
  REQUIRE(d.contains1(3));
  REQUIRE(format_decomposition(d) == "S0={1,2} S1={1,3}");

  REQUIRE_THROWS_AS(ResonantDecomposition(3, {}, {1, 2, 3}), InvalidDecomposition);
  REQUIRE_THROWS_AS(ResonantDecomposition(3, {1, 2, 3}, {}), InvalidDecomposition);
  REQUIRE_THROWS_AS(ResonantDecomposition(3, {1, 4}, {2, 3}), InvalidDecomposition);
  REQUIRE_THROWS_AS(ResonantDecomposition(3, {0, 1}, {2, 3}), InvalidDecomposition);
  REQUIRE_THROWS_AS(ResonantDecomposition(3, {1}, {2}), InvalidDecomposition);  // misses 3
  REQUIRE_THROWS_AS(ResonantDecomposition(0, {1}, {1}), InvalidDecomposition);
  // Overlap is legal; subsets need not be disjoint.
  REQUIRE_NOTHROW(ResonantDecomposition(2, {1, 2}, {1, 2}));
}

TEST_CASE("mask conversions round-trip") {
  std::vector<int> v{1, 3, 4};
  REQUIRE(ResonantDecomposition::to_mask(v) == 0b1101);
  REQUIRE(ResonantDecomposition::from_mask(0b1101) == v);
}

TEST_CASE("resonance check is directional") {
  // 111111113: products all hit λ1 except 3·3 = 3.
  auto s3 = oracles::table_from_digits("111111113");
  REQUIRE(check_resonance(s3, ResonantDecomposition(3, {1, 3}, {1, 2})));
  auto w = resonance_witness(s3, ResonantDecomposition(3, {1, 2}, {1, 3}));
  REQUIRE(w.has_value());
  // Fails in S1·S1 ⊆ S0: 3·3 = 3 ∉ {1,2}.
  REQUIRE(w->lhs_subset == 1);
  REQUIRE(w->rhs_subset == 1);
  REQUIRE(w->target_subset == 0);
  REQUIRE(w->alpha == 3);
  REQUIRE(w->beta == 3);
  REQUIRE(w->product == 3);
  REQUIRE(w->describe() == "S1*S1: 3*3 = 3 not in S0");
}

TEST_CASE("resonance witness requires an abelian semigroup of equal order") {
  ResonantDecomposition d(2, {1}, {2});
  REQUIRE_THROWS_AS(resonance_witness(MultiplicationTable(2, {2, 2, 1, 1}), d),
                    NotAssociative);
  // Left projection a*b = a is associative but not commutative.
  REQUIRE_THROWS_AS(resonance_witness(MultiplicationTable(2, {1, 1, 2, 2}), d),
                    NotAbelian);
  REQUIRE_THROWS_AS(resonance_witness(s12(), d), OrderMismatch);
}

TEST_CASE("the known resonances of the zero-adjoined two-element group") {
  auto rs = find_all_resonances(s12());
  REQUIRE(rs.size() == 3);
  REQUIRE(rs[0] == ResonantDecomposition(3, {1, 2}, {1, 3}));
  REQUIRE(rs[1] == ResonantDecomposition(3, {1, 2, 3}, {1}));
  REQUIRE(rs[2] == ResonantDecomposition(3, {1, 2, 3}, {1, 2, 3}));
}

TEST_CASE("the trivial order-1 semigroup has exactly one resonance") {
  auto rs = find_all_resonances(MultiplicationTable(1, {1}));
  REQUIRE(rs.size() == 1);
  REQUIRE(rs[0] == ResonantDecomposition(1, {1}, {1}));
}

TEST_CASE("resonance search equals the covering-pair oracle through order 4") {
  EnumerationFilter ab;
  ab.commutative = true;
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate(n, ab, Convention::IsoAndAntiIso)) {
      REQUIRE(as_masks(find_all_resonances(t)) == oracles::oracle_resonances(t, false));
      ResonanceSearchOptions disjoint;
      disjoint.disjoint_only = true;
      REQUIRE(as_masks(find_all_resonances(t, disjoint)) ==
              oracles::oracle_resonances(t, true));
    }
}

TEST_CASE("search results are sorted, resonant, and end with the full pair") {
  for (const auto& entry : oracles::census_order3_abelian()) {
    auto t = oracles::table_from_digits(entry.digits);
    auto rs = find_all_resonances(t);
    REQUIRE_FALSE(rs.empty());  // (S, S) always works
    auto masks = as_masks(rs);
    REQUIRE(std::is_sorted(masks.begin(), masks.end()));
    REQUIRE(std::adjacent_find(masks.begin(), masks.end()) == masks.end());
    for (const auto& d : rs) REQUIRE(check_resonance(t, d));
    REQUIRE(rs.back() == ResonantDecomposition(3, {1, 2, 3}, {1, 2, 3}));
  }
}

TEST_CASE("adjoining the zero element to both subsets preserves resonance") {
  for (const auto& entry : oracles::census_order3_abelian()) {
    if (!entry.has_zero) continue;
    auto t = oracles::table_from_digits(entry.digits);
    int z = *find_zero(t);
    for (const auto& d : find_all_resonances(t)) {
      auto s0 = d.s0, s1 = d.s1;
      s0.push_back(z);
      s1.push_back(z);
      REQUIRE(check_resonance(t, ResonantDecomposition(3, s0, s1)));
    }
  }
}

TEST_CASE("disjoint_only returns the disjoint subsequence of the full search") {
  for (const auto& entry : oracles::census_order3_abelian()) {
    auto t = oracles::table_from_digits(entry.digits);
    ResonanceSearchOptions opts;
    opts.disjoint_only = true;
    auto sub = as_masks(find_all_resonances(t, opts));
    auto all = as_masks(find_all_resonances(t));
    for (const auto& [m0, m1] : sub) REQUIRE((m0 & m1) == 0);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> expected;
    for (const auto& p : all)
      if ((p.first & p.second) == 0) expected.push_back(p);
    REQUIRE(sub == expected);
  }
}

TEST_CASE("parallel resonance search matches sequential") {
  auto t = truncated_addition(13);  // large enough to engage the worker pool
  auto seq = find_all_resonances(t);
  REQUIRE_FALSE(seq.empty());
  for (int jobs : {2, 8}) {
    ResonanceSearchOptions opts;
    opts.jobs = jobs;
    REQUIRE(find_all_resonances(t, opts) == seq);
  }
  ResonanceSearchOptions auto_jobs;
  auto_jobs.jobs = 0;
  REQUIRE(find_all_resonances(t, auto_jobs) == seq);
}

TEST_CASE("resonance search refuses orders beyond the mask width") {
  auto t = truncated_addition(kResonanceOrderCap + 1);
  try {
    find_all_resonances(t);
    FAIL("expected OrderTooLarge");
  } catch (const OrderTooLarge& e) {
    REQUIRE(e.order == kResonanceOrderCap + 1);
    REQUIRE(e.cap == kResonanceOrderCap);
  }
}

TEST_CASE("expansion modes have roman names") {
  REQUIRE(std::string(to_roman(ExpansionMode::Expanded)) == "i");
  REQUIRE(std::string(to_roman(ExpansionMode::ResonantSubalgebra)) == "ii");
  REQUIRE(std::string(to_roman(ExpansionMode::ZeroReduced)) == "iii");
  REQUIRE(std::string(to_roman(ExpansionMode::ZeroReducedResonant)) == "iv");
  REQUIRE(mode_from_string("i") == ExpansionMode::Expanded);
  REQUIRE(mode_from_string("ii") == ExpansionMode::ResonantSubalgebra);
  REQUIRE(mode_from_string("iii") == ExpansionMode::ZeroReduced);
  REQUIRE(mode_from_string("iv") == ExpansionMode::ZeroReducedResonant);
  REQUIRE(mode_from_string("2") == ExpansionMode::ResonantSubalgebra);
  REQUIRE(mode_from_string("4") == ExpansionMode::ZeroReducedResonant);
  REQUIRE_FALSE(mode_from_string("v").has_value());
  REQUIRE_FALSE(mode_from_string("").has_value());
}

TEST_CASE("classification reflects zero and resonance structure") {
  for (const auto& entry : oracles::census_order3_abelian()) {
    auto t = oracles::table_from_digits(entry.digits);
    auto cap = classify(t);
    REQUIRE(cap.has_zero == entry.has_zero);
    REQUIRE(cap.zero_element == find_zero(t));
    REQUIRE(cap.resonances == find_all_resonances(t));
    REQUIRE(cap.supports(ExpansionMode::Expanded));
    REQUIRE(cap.supports(ExpansionMode::ResonantSubalgebra));  // (S,S) always
    REQUIRE(cap.supports(ExpansionMode::ZeroReduced) == entry.has_zero);
    REQUIRE(cap.supports(ExpansionMode::ZeroReducedResonant) == entry.has_zero);
    REQUIRE(cap.supported_modes() == (entry.has_zero ? "i;ii;iii;iv" : "i;ii"));
  }
}
