#include <gtest/gtest.h>

#include "support.hpp"

using namespace leibniz;

namespace {

Algebra sl2_with_eh(const Gaussian& c) {
  TableBuilder tb({"e", "h", "f"});
  tb.antisym("e", "h", "e", c).antisym("h", "f", "f", 2).antisym("e", "f", "h", 1);
  return tb.build();
}

CatalogSpec L1(std::size_t s, std::size_t m, Gaussian alpha, Gaussian a) {
  return {Family::L1, s, m, alpha, a, std::nullopt};
}

// Identity plus a few small off-diagonal entries, then a row swap.
Matrix sparse_change(std::size_t d) {
  Matrix T = Matrix::identity(d);
  for (int n = 0; n < 3; ++n) {
    const auto r = static_cast<std::size_t>(testing_support::small_int(0, static_cast<long>(d) - 1));
    const auto c = static_cast<std::size_t>(testing_support::small_int(0, static_cast<long>(d) - 1));
    if (r != c) T(r, c) = testing_support::random_nonzero(2);
  }
  for (std::size_t c = 0; c < d; ++c) std::swap(T(0, c), T(d - 1, c));
  return T;
}

}  // namespace

TEST(Algebra, ShapeChecks) {
  EXPECT_THROW(Algebra({"a", "b"}, std::vector<Gaussian>(7)), ShapeMismatch);
  EXPECT_THROW(Algebra({"a", "a"}, std::vector<Gaussian>(8)), ShapeMismatch);
  EXPECT_THROW(sl2_canonical().require_index("q"), Error);
}

TEST(Product, Examples) {
  const Algebra s = sl2_canonical();
  EXPECT_EQ(product(s, unit_vector(3, sl2_e), unit_vector(3, sl2_h)), (Vec{2, 0, 0}));
  EXPECT_EQ(product(s, unit_vector(3, sl2_e), unit_vector(3, sl2_f)), (Vec{0, 1, 0}));
  EXPECT_TRUE(is_zero(product(s, zero_vector(3), Vec{1, 2, 3})));
  EXPECT_THROW(product(s, Vec{1, 2}, Vec{1, 2, 3}), DimensionMismatch);
}

TEST(CheckLeibniz, Examples) {
  EXPECT_TRUE(check_leibniz(sl2_canonical()).passed());
  EXPECT_TRUE(check_leibniz(build(L1(1, 4, 2, 3))).passed());

  const Algebra bad = sl2_with_eh(3);
  const auto rep = check_leibniz(bad);
  EXPECT_FALSE(rep.passed());
  const auto e = bad.require_index("e"), h = bad.require_index("h"), f = bad.require_index("f");
  bool found = false;
  for (const auto& v : rep.violations) found = found || (v.x == e && v.y == f && v.z == h);
  EXPECT_TRUE(found);
  EXPECT_EQ(rep.violations.size(), testing_support::naive_leibniz_violations(bad));
}

TEST(CheckLie, Examples) {
  EXPECT_TRUE(check_lie(sl2_canonical()));
  EXPECT_FALSE(check_lie(build(L1(1, 2, 1, 1))));
  EXPECT_TRUE(check_lie(Algebra::abelian({"a", "b"})));
  EXPECT_TRUE(is_abelian(Algebra::abelian({"a"})));
  EXPECT_FALSE(is_antisymmetric(build(L1(1, 2, 1, 1))));
}

TEST(BracketSubspaces, Examples) {
  const auto spec = L1(1, 3, 1, 1);
  const Algebra L = build(spec);
  const auto blocks = natural_blocks(spec);
  const auto h = Subspace::coordinates(L.dim(), {L.require_index("h_1")});
  EXPECT_EQ(bracket_subspaces(L, blocks.ideal, h), blocks.ideal);
  EXPECT_TRUE(bracket_subspaces(L, blocks.ideal, Subspace::zero(L.dim())).is_zero());

  const auto spec2 = L1(2, 3, 1, 1);
  const Algebra L2 = build(spec2);
  const auto b2 = natural_blocks(spec2);
  EXPECT_TRUE(bracket_subspaces(L2, b2.ideal, b2.sl2[1]).is_zero());
  EXPECT_THROW(bracket_subspaces(L2, Subspace::full(3), b2.ideal), DimensionMismatch);
}

TEST(SquaresIdeal, Examples) {
  EXPECT_TRUE(squares_ideal(sl2_canonical()).is_zero());
  for (std::size_t m : {0u, 1u, 3u}) {
    const Algebra L = build(L1(1, m, 2, 1));
    EXPECT_EQ(squares_ideal(L), Subspace::coordinates(L.dim(), x_coordinates(L)));
  }
  const Algebra T = build({Family::THM42, std::nullopt, 2, std::nullopt, std::nullopt, std::nullopt});
  EXPECT_EQ(squares_ideal(T), Subspace::coordinates(T.dim(), x_coordinates(T)));
  EXPECT_EQ(x_coordinates(T).size(), 6u);
}

TEST(SquaresIdeal, ClosureRunsOnNonLeibnizInput) {
  // [a,a]=b and [b,c]=-[c,b]=d: d is not a symmetrized product, so only closure adds it.
  TableBuilder tb({"a", "b", "c", "d"});
  tb.add("a", "a", "b", 1).antisym("b", "c", "d", 1);
  const auto cl = squares_ideal_closure(tb.build());
  EXPECT_EQ(cl.initial.dim(), 1u);
  EXPECT_EQ(cl.ideal.dim(), 2u);
  EXPECT_EQ(cl.passes, 2);
}

TEST(Quotient, Examples) {
  const auto spec = L1(1, 4, 2, 3);
  const Algebra L = build(spec);
  const auto q = quotient(L, squares_ideal(L));
  EXPECT_EQ(q.algebra.dim(), 6u);
  EXPECT_TRUE(check_lie(q.algebra));
  EXPECT_EQ(q.algebra, testing_support::expected_quotient(spec));

  const auto all = quotient(L, Subspace::full(L.dim()));
  EXPECT_EQ(all.algebra.dim(), 0u);
  const auto none = quotient(L, Subspace::zero(L.dim()));
  EXPECT_EQ(none.algebra, L);
  EXPECT_THROW(quotient(L, Subspace::coordinates(L.dim(), {0})), NotAnIdeal);
}

TEST(Quotient, ProjectionRespectsBracket) {
  const Algebra L = build({Family::THM42, std::nullopt, 1, std::nullopt, std::nullopt, std::nullopt});
  const auto q = quotient(L, squares_ideal(L));
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      EXPECT_EQ(q.projection.apply(L.bracket_basis(i, j)),
                product(q.algebra, q.projection.col(i), q.projection.col(j)));
}

TEST(Assemble, Examples) {
  const Algebra two = assemble({sl2_canonical("_1"), sl2_canonical("_2")});
  EXPECT_EQ(two.dim(), 6u);
  EXPECT_TRUE(check_lie(two));

  const Algebra S = assemble({sl2_canonical(), Algebra::abelian({"x_0", "x_1", "x_2"})}, {{1, 0, irreducible_module(2)}});
  EXPECT_TRUE(check_leibniz(S).passed());
  EXPECT_EQ(S, build({Family::SIMPLE_SL2, std::nullopt, 2, std::nullopt, std::nullopt, std::nullopt}));
  const auto q = quotient(S, squares_ideal(S));
  EXPECT_TRUE(q.algebra.same_table(sl2_canonical()));

  auto broken = irreducible_module(2);
  broken.matrices[sl2_f](1, 0) = 2;
  const Algebra B = assemble({sl2_canonical(), Algebra::abelian({"x_0", "x_1", "x_2"})}, {{1, 0, broken}});
  EXPECT_FALSE(check_leibniz(B).passed());

  TableBuilder nonabelian({"p", "q"});
  nonabelian.add("p", "q", "p", 1);
  EXPECT_THROW(assemble({sl2_canonical(), nonabelian.build()}, {{1, 0, zero_module(sl2_canonical(), 2)}}), ShapeMismatch);
  EXPECT_THROW(assemble({sl2_canonical(), Algebra::abelian({"p"})}, {{1, 0, zero_module(sl2_canonical(), 2)}}), ShapeMismatch);
}

TEST(ChangeBasis, Examples) {
  const Algebra s = sl2_canonical();
  EXPECT_EQ(change_basis(s, BasisChange::identity(3)), s);

  Matrix scale = Matrix::identity(3);
  scale(sl2_e, sl2_e) = 2;
  scale(sl2_f, sl2_f) = Gaussian::ratio(1, 2);
  EXPECT_TRUE(change_basis(s, BasisChange(scale)).same_table(s));

  EXPECT_THROW(BasisChange(Matrix(3, 3)), SingularTransform);
}

TEST(ChangeBasis, SecondNormalizingStepGivesCanonicalTable) {
  // Intermediate table with e_2 already canonical and f_2 carrying b1 = 3:
  // [x^1,f_2] = 3x^1 + 9x^2, [x^2,f_2] = -x^1 - 3x^2.
  const std::size_t m = 1;
  const Algebra mid = build_generic_action(m, 0, 1, 0, 3, 9, -1);
  ASSERT_TRUE(check_leibniz(mid).passed());
  Matrix T = Matrix::identity(mid.dim());
  for (std::size_t k = 0; k <= m; ++k) T(6 + k, 6 + m + 1 + k) = 3;
  const Algebra out = change_basis(mid, BasisChange(T));
  EXPECT_TRUE(out.same_table(build({Family::THM42, std::nullopt, m, std::nullopt, std::nullopt, std::nullopt})));
}

TEST(Solvability, Examples) {
  const auto sl2 = solvability_invariants(sl2_canonical());
  EXPECT_FALSE(sl2.is_solvable);
  EXPECT_EQ(sl2.derived_series.back().dim(), 3u);

  TableBuilder r({"y_1", "y_2"});
  r.antisym("y_1", "y_2", "y_1", 1);
  const auto rs = solvability_invariants(r.build());
  EXPECT_TRUE(rs.is_solvable);
  EXPECT_FALSE(rs.is_nilpotent);

  const auto spec = L1(1, 3, 1, 2);
  const Algebra L = build(spec);
  EXPECT_TRUE(solvability_invariants(L).right_annihilator.contains(natural_blocks(spec).ideal));
  EXPECT_EQ(right_annihilator(L), natural_blocks(spec).ideal);

  const auto ab = solvability_invariants(Algebra::abelian({"a", "b"}));
  EXPECT_TRUE(ab.is_nilpotent);
  EXPECT_EQ(ab.right_annihilator.dim(), 2u);
}

TEST(AlgebraProperty, NaiveOracleAgreesOnRandomTables) {
  for (int n = 0; n < 40; ++n) {
    const Algebra L = testing_support::random_algebra(testing_support::small_int(1, 4), 0.8);
    EXPECT_EQ(check_leibniz(L).violations.size(), testing_support::naive_leibniz_violations(L));
  }
}

TEST(AlgebraProperty, LeibnizInvariantUnderBasisChange) {
  const std::vector<Algebra> samples{build(L1(1, 1, 2, 1)), build_generic_action(0, 1, 1, -1, 0, 1, 0),
                                     testing_support::random_algebra(4, 0.7)};
  for (const auto& L : samples)
    for (int n = 0; n < 5; ++n) {
      const BasisChange T(sparse_change(L.dim()));
      const Algebra M = change_basis(L, T);
      EXPECT_EQ(check_leibniz(M).passed(), check_leibniz(L).passed());
      EXPECT_EQ(check_leibniz(M).violations.empty(), testing_support::naive_leibniz_violations(M) == 0);
      EXPECT_EQ(change_basis(M, BasisChange(T.inverse())), L);
    }
}

TEST(AlgebraProperty, SquaresIdealStructureOnLeibnizAlgebras) {
  for (const auto& fam : {Family::THM25, Family::L2, Family::THM42, Family::SIMPLE_SL2}) {
    CatalogSpec spec{fam, std::nullopt, 2, std::nullopt, std::nullopt, std::nullopt};
    if (fam == Family::THM25 || fam == Family::L2) spec.a = Gaussian(-1);
    const Algebra L = build(spec);
    const auto cl = squares_ideal_closure(L);
    const auto full = Subspace::full(L.dim());
    EXPECT_EQ(cl.passes, 1);
    EXPECT_TRUE(is_two_sided_ideal(L, cl.ideal));
    EXPECT_TRUE(bracket_subspaces(L, full, cl.ideal).is_zero());
    EXPECT_TRUE(bracket_subspaces(L, cl.ideal, cl.ideal).is_zero());
    EXPECT_TRUE(check_lie(quotient(L, cl.ideal).algebra));
  }
}
