#include <catch2/catch_amalgamated.hpp>

#include "sexpansion/expansion.hpp"
#include "oracles.hpp"

using namespace sexpansion;

namespace {

LieAlgebra sl2() { return *named_algebra("sl2"); }
LieAlgebra solv2() { return *named_algebra("solv2"); }

MultiplicationTable s12() { return oracles::table_from_digits("111123132"); }
MultiplicationTable z3() { return oracles::table_from_digits("123231312"); }
MultiplicationTable all_to_one() { return oracles::table_from_digits("111111111"); }

// Every structure constant of the expansion against the defining product.
void require_factorization(const LieAlgebra& seed, const MultiplicationTable& t) {
  auto e = expand(seed, t);
  const int d = seed.dim();
  const int n = t.order();
  REQUIRE(e.algebra().dim() == n * d);
  SelectorTensor k = selector(t);
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int beta = 1; beta <= n; ++beta)
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
          for (int gamma = 1; gamma <= n; ++gamma)
            for (int g = 1; g <= d; ++g) {
              Rational expected = k(alpha, beta, gamma) * seed.c(i, j, g);
              REQUIRE(e.algebra().c(e.flat(i, alpha), e.flat(j, beta),
                                    e.flat(g, gamma)) == expected);
            }
}

}  // namespace

TEST_CASE("flat indexing is sector-major and invertible") {
  auto e = expand(solv2(), s12());
  REQUIRE(e.seed_dim() == 2);
  REQUIRE(e.semigroup_order() == 3);
  int expected = 1;
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int i = 1; i <= 2; ++i) {
      REQUIRE(e.flat(i, alpha) == expected);
      auto idx = e.unflat(expected);
      REQUIRE(idx == ExpandedBasisIndex{i, alpha, expected});
      ++expected;
    }
  REQUIRE_THROWS_AS(e.flat(0, 1), IndexOutOfRange);
  REQUIRE_THROWS_AS(e.flat(3, 1), IndexOutOfRange);
  REQUIRE_THROWS_AS(e.flat(1, 4), IndexOutOfRange);
  REQUIRE_THROWS_AS(e.unflat(7), IndexOutOfRange);
  REQUIRE_THROWS_AS(e.unflat(0), IndexOutOfRange);
}

TEST_CASE("expansion labels pair generator indices with semigroup elements") {
  auto e = expand(sl2(), s12());
  REQUIRE(e.algebra().label(1) == "(X1,L1)");
  REQUIRE(e.algebra().label(2) == "(X2,L1)");
  REQUIRE(e.algebra().label(4) == "(X1,L2)");
  REQUIRE(e.algebra().label(9) == "(X3,L3)");
}

TEST_CASE("structure constants factor through the selector") {
  require_factorization(sl2(), s12());
  require_factorization(solv2(), z3());
  require_factorization(*named_algebra("abelian:2"), s12());
  require_factorization(*named_algebra("so3"), all_to_one());
}

TEST_CASE("a cyclic product lands the bracket in the product sector") {
  // λ2·λ3 = λ1 in the 3-element group, so [X_(1,2), X_(2,3)] = X_(1,1).
  auto e = expand(solv2(), z3());
  int a = e.flat(1, 2), b = e.flat(2, 3), target = e.flat(1, 1);
  REQUIRE(e.algebra().c(a, b, target) == 1);
  for (int g = 1; g <= 6; ++g)
    if (g != target) REQUIRE(e.algebra().c(a, b, g) == 0);
}

TEST_CASE("expansions of valid seeds satisfy jacobi") {
  for (const char* digits : {"111111111", "111123132", "123231312", "111122122"}) {
    auto t = oracles::table_from_digits(digits);
    REQUIRE(check_jacobi(expand(sl2(), t).algebra()));
    REQUIRE(check_jacobi(expand(solv2(), t).algebra()));
  }
}

TEST_CASE("expanding by the trivial semigroup returns the seed unchanged") {
  auto one = MultiplicationTable(1, {1});
  for (const char* name : {"sl2", "so3", "solv2", "abelian:3"}) {
    auto seed = *named_algebra(name);
    auto e = expand(seed, one);
    REQUIRE(e.algebra() == seed);  // dim, constants, and labels
  }
  // A 0-dimensional seed stays 0-dimensional through any table.
  REQUIRE(expand(new_algebra(0, {}), s12()).algebra().dim() == 0);
}

TEST_CASE("expand validates both of its inputs") {
  REQUIRE_THROWS_AS(expand(sl2(), MultiplicationTable(2, {2, 2, 1, 1})), NotAssociative);
  REQUIRE_THROWS_AS(expand(sl2(), MultiplicationTable(2, {1, 1, 2, 2})), NotAbelian);
  auto bad = new_algebra(3, {{1, 2, 3, Rational(1)}, {1, 3, 3, Rational(1)},
                             {2, 3, 1, Rational(1)}});
  REQUIRE_THROWS_AS(expand(bad, s12()), NotALieAlgebra);
}

TEST_CASE("zero reduction drops the absorbing sector") {
  auto e = expand(solv2(), s12());
  auto r = zero_reduce(e);
  REQUIRE(r.dim() == 4);  // (3−1)·2
  REQUIRE(check_jacobi(r));
  REQUIRE(r.label(1) == "(X1,L2)");
  REQUIRE(r.label(4) == "(X2,L3)");
  REQUIRE_THROWS_AS(zero_reduce(expand(solv2(), z3())), NoZeroElement);
}

TEST_CASE("reduction by the all-absorbing semigroup is abelian") {
  for (const char* name : {"sl2", "solv2"}) {
    auto r = zero_reduce(expand(*named_algebra(name), all_to_one()));
    REQUIRE(r.dim() == 2 * named_algebra(name)->dim());
    for (int i = 1; i <= r.dim(); ++i)
      for (int j = 1; j <= r.dim(); ++j)
        for (int k = 1; k <= r.dim(); ++k) REQUIRE(r.c(i, j, k) == 0);
  }
}

TEST_CASE("zero reduction is not a subalgebra of the expansion") {
  // λ2·λ2 = λ1 (the zero): the expanded bracket [X_(1,2), X_(2,2)] is
  // nonzero but lands entirely in the dropped sector, so the reduction
  // forces it to zero.
  auto t = oracles::table_from_digits("111111112");
  auto e = expand(solv2(), t);
  REQUIRE(e.algebra().c(e.flat(1, 2), e.flat(2, 2), e.flat(1, 1)) == 1);
  auto r = zero_reduce(e);
  REQUIRE(r.dim() == 4);
  // Retained flats 3,4,5,6 renumber to 1..4; the pair above becomes (1,2).
  for (int k = 1; k <= 4; ++k) REQUIRE(r.c(1, 2, k) == 0);
  // λ3·λ3 = λ2 keeps [X_(1,3), X_(2,3)] = X_(1,2) alive.
  REQUIRE(r.c(3, 4, 1) == 1);
  REQUIRE(check_jacobi(r));
}

TEST_CASE("the resonant subalgebra of the worked example") {
  auto e = expand(solv2(), s12());
  SubspaceSplit split({2}, {1});
  ResonantDecomposition d(3, {1, 2}, {1, 3});
  auto r = resonant_subalgebra(e, split, d);
  REQUIRE(r.dim() == 4);
  REQUIRE(check_jacobi(r));
  // Retained: (X2,L1), (X2,L2) from S0⊗V0 and (X1,L1), (X1,L3) from S1⊗V1.
  REQUIRE(r.label(1) == "(X1,L1)");
  REQUIRE(r.label(2) == "(X2,L1)");
  REQUIRE(r.label(3) == "(X2,L2)");
  REQUIRE(r.label(4) == "(X1,L3)");
  REQUIRE(r.c(1, 2, 1) == 1);
  REQUIRE(r.c(1, 3, 1) == 1);
  REQUIRE(r.c(2, 4, 1) == -1);
  REQUIRE(r.c(3, 4, 4) == -1);
}

TEST_CASE("the reduced resonant algebra of the worked example") {
  auto e = expand(solv2(), s12());
  auto r = zero_reduced_resonant(e, SubspaceSplit({2}, {1}),
                                 ResonantDecomposition(3, {1, 2}, {1, 3}));
  REQUIRE(r.dim() == 2);
  REQUIRE(r.label(1) == "(X2,L2)");
  REQUIRE(r.label(2) == "(X1,L3)");
  REQUIRE(r.c(1, 2, 2) == -1);
  REQUIRE(r.c(1, 2, 1) == 0);
  REQUIRE(check_jacobi(r));
  REQUIRE_THROWS_AS(zero_reduced_resonant(expand(solv2(), z3()), SubspaceSplit({2}, {1}),
                                          ResonantDecomposition(3, {1, 2, 3}, {1, 2, 3})),
                    NoZeroElement);
}

TEST_CASE("resonant restriction validates the split and the decomposition") {
  auto e = expand(solv2(), s12());
  // Wrong sides: [X1,X2] = X1 forces X1 ∈ V1.
  REQUIRE_THROWS_AS(
      resonant_subalgebra(e, SubspaceSplit({1}, {2}), ResonantDecomposition(3, {1, 2}, {1, 3})),
      BadSubspaceStructure);
  // Swapped subsets are not resonant for this table.
  REQUIRE_THROWS_AS(
      resonant_subalgebra(e, SubspaceSplit({2}, {1}), ResonantDecomposition(3, {1, 3}, {1, 2})),
      NotResonant);
  // Order mismatch between table and decomposition.
  REQUIRE_THROWS_AS(
      resonant_subalgebra(e, SubspaceSplit({2}, {1}), ResonantDecomposition(2, {1}, {2})),
      OrderMismatch);
}

TEST_CASE("resonant subalgebras close for every resonance of the census") {
  for (const auto& entry : oracles::census_order3_abelian()) {
    auto t = oracles::table_from_digits(entry.digits);
    auto e = expand(solv2(), t);
    SubspaceSplit split({2}, {1});
    for (const auto& d : find_all_resonances(t)) {
      auto r = resonant_subalgebra(e, split, d);  // ClosureViolation would throw
      REQUIRE(check_jacobi(r));
      REQUIRE(r.dim() == static_cast<int>(d.s0.size() + d.s1.size()));
    }
  }
}

TEST_CASE("expansion_output dispatches on mode") {
  auto seed = solv2();
  auto t = s12();
  SubspaceSplit split({2}, {1});
  ResonantDecomposition d(3, {1, 2}, {1, 3});
  auto e = expand(seed, t);
  REQUIRE(expansion_output(seed, t, ExpansionMode::Expanded) == e.algebra());
  REQUIRE(expansion_output(seed, t, ExpansionMode::ResonantSubalgebra, split, d) ==
          resonant_subalgebra(e, split, d));
  REQUIRE(expansion_output(seed, t, ExpansionMode::ZeroReduced) == zero_reduce(e));
  REQUIRE(expansion_output(seed, t, ExpansionMode::ZeroReducedResonant, split, d) ==
          zero_reduced_resonant(e, split, d));
  REQUIRE_THROWS_AS(expansion_output(seed, t, ExpansionMode::ResonantSubalgebra),
                    InvalidDecomposition);
  REQUIRE_THROWS_AS(expansion_output(seed, t, ExpansionMode::ZeroReducedResonant, split, {}),
                    InvalidDecomposition);
}

TEST_CASE("semisimplicity preservation is decided on the output algebra") {
  auto one = MultiplicationTable(1, {1});
  REQUIRE(preserves_semisimplicity(sl2(), one, ExpansionMode::Expanded));
  // Every bracket of the reduction by the all-absorbing table vanishes, so
  // the Killing form degenerates.
  REQUIRE_FALSE(preserves_semisimplicity(sl2(), all_to_one(), ExpansionMode::ZeroReduced));
  REQUIRE_FALSE(preserves_semisimplicity(sl2(), all_to_one(), ExpansionMode::Expanded));
  REQUIRE_THROWS_AS(preserves_semisimplicity(solv2(), one, ExpansionMode::Expanded),
                    NotSemisimple);
}
