#include "wonder/matgroup.hpp"

#include "support/laws.hpp"
#include "support/random_gen.hpp"

#include "doctest.h"

#include <algorithm>

using namespace wonder;

namespace {

QVector qv(std::initializer_list<int> entries) {
  QVector v;
  for (int e : entries) v.push_back(Rational(e));
  return v;
}

QMatrix perm(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  return permutation_matrix(permutation_from_cycles(n, cycles));
}

MatrixGroup rotation4() {
  QMatrix rot(2, 2);
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  return MatrixGroup::from_generators({rot});
}

MatrixGroup diagonal_signs2() {
  QMatrix d1 = QMatrix::identity(2), d2 = QMatrix::identity(2);
  d1.at(0, 0) = -1;
  d2.at(1, 1) = -1;
  return MatrixGroup::from_generators({d1, d2});
}

}  // namespace

TEST_CASE("closure from generators") {
  CHECK(MatrixGroup::trivial(3).order() == 1);
  CHECK(MatrixGroup::from_generators({QMatrix::identity(3)}).order() == 1);

  const MatrixGroup s3 =
      MatrixGroup::from_generators({perm(3, {{1, 2}}), perm(3, {{1, 2, 3}})});
  CHECK(s3.order() == 6);
  CHECK(s3.identity().is_identity());
  CHECK(s3.contains(perm(3, {{1, 3}})));

  CHECK(rotation4().order() == 4);
  CHECK(MatrixGroup::symmetric(4).order() == 24);

  // non-orthogonal generator
  CHECK_THROWS_AS(
      MatrixGroup::from_generators({QMatrix::from_rows({qv({1, 1}), qv({0, 1})})}),
      ValidationError);
  // closure cap: the rotation group has order 4, a cap of 3 must trip
  QMatrix rot(2, 2);
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  CHECK_THROWS_AS(MatrixGroup::from_generators({rot}, 3), BudgetError);
}

TEST_CASE("subgroup enumeration") {
  CHECK(subgroups(MatrixGroup::trivial(2)).size() == 1);
  CHECK(subgroups(MatrixGroup::symmetric(3)).size() == 6);
  CHECK(subgroups(diagonal_signs2()).size() == 5);
  CHECK(subgroups(MatrixGroup::symmetric(4)).size() == 30);

  // every enumerated subgroup is closed and contained in the parent
  const MatrixGroup s4 = MatrixGroup::symmetric(4);
  for (const MatrixGroup& h : subgroups(s4)) {
    CHECK(h.is_subgroup_of(s4));
    for (const QMatrix& a : h.elements())
      for (const QMatrix& b : h.elements())
        if (!h.contains(a * b)) FAIL("subgroup not closed");
  }

  SubgroupBudget tiny;
  tiny.subgroup_cap = 3;
  CHECK_THROWS_AS(subgroups(MatrixGroup::symmetric(4), tiny), BudgetError);
}

TEST_CASE("invariant line span") {
  CHECK(invariant_line_span(MatrixGroup::trivial(3)).is_full());

  // Young subgroup on {1,2,3} inside S_4
  const MatrixGroup young =
      MatrixGroup::from_generators({perm(4, {{1, 2}}), perm(4, {{1, 2, 3}})});
  CHECK(invariant_line_span(young) ==
        Subspace::span(4, {qv({1, 1, 1, 0}), qv({0, 0, 0, 1})}));

  // wreath-type group <(12),(34),(13)(24)>
  const MatrixGroup wreath = MatrixGroup::from_generators(
      {perm(4, {{1, 2}}), perm(4, {{3, 4}}), perm(4, {{1, 3}, {2, 4}})});
  CHECK(invariant_line_span(wreath) ==
        Subspace::span(4, {qv({1, 1, 0, 0}), qv({0, 0, 1, 1})}));

  // a 2-element Young subgroup spans everything (fixed plane + flipped line)
  CHECK(invariant_line_span(MatrixGroup::from_generators({perm(3, {{1, 2}})})).is_full());
}

TEST_CASE("fixed subspaces and eigenspaces") {
  CHECK(fixed_subspace(MatrixGroup::from_generators({perm(3, {{1, 2, 3}})})) ==
        Subspace::span(3, {qv({1, 1, 1})}));
  CHECK(eigenspace(perm(4, {{1, 2}, {3, 4}}), -1) ==
        Subspace::span(4, {qv({1, -1, 0, 0}), qv({0, 0, 1, -1})}));
  CHECK(eigenspace(QMatrix::identity(3), -1).is_zero());
  CHECK(eigenspace(QMatrix::identity(3), 1).is_full());
  CHECK_THROWS_AS(eigenspace(QMatrix::identity(3), 2), ValidationError);
}

TEST_CASE("fixing subgroup") {
  const MatrixGroup s3 = MatrixGroup::symmetric(3);
  CHECK(fixing_subgroup(s3, Subspace::zero(3)) == s3);
  CHECK(fixing_subgroup(s3, Subspace::span(3, {qv({1, 1, 1})})) == s3);

  // the 4-cycle group fixes span{(1,1,1,1),(1,-1,1,-1)} = U_{13|24} exactly on
  // its half-turn subgroup
  const MatrixGroup z4 = MatrixGroup::from_generators({perm(4, {{1, 2, 3, 4}})});
  const Subspace u13_24 = Subspace::span(4, {qv({1, 1, 1, 1}), qv({1, -1, 1, -1})});
  CHECK(fixing_subgroup(z4, u13_24) ==
        MatrixGroup::from_generators({perm(4, {{1, 3}, {2, 4}})}));
}

TEST_CASE("alpha homomorphism") {
  const MatrixGroup trivial = MatrixGroup::trivial(2);
  const auto a0 = alpha_homomorphism(trivial, {qv({1, 0}), qv({0, 1})});
  CHECK(a0.injective);
  CHECK(a0.images == std::vector<SignVector>{{1, 1}});

  const MatrixGroup swap2 = MatrixGroup::from_generators({perm(2, {{1, 2}})});
  const auto a1 = alpha_homomorphism(swap2, {qv({1, 1}), qv({1, -1})});
  CHECK(a1.injective);
  // elements are ordered identity first
  CHECK(a1.images == std::vector<SignVector>{{1, 1}, {1, -1}});

  const MatrixGroup minus = MatrixGroup::from_generators({-QMatrix::identity(2)});
  const auto a2 = alpha_homomorphism(minus, {qv({1, 0}), qv({0, 1})});
  CHECK(a2.images == std::vector<SignVector>{{1, 1}, {-1, -1}});

  CHECK_THROWS_AS(alpha_homomorphism(swap2, {qv({1, 0})}), ValidationError);
}

TEST_CASE("elementary abelian 2 detection") {
  CHECK(is_elementary_abelian_2(MatrixGroup::trivial(4)));
  CHECK(is_elementary_abelian_2(
      MatrixGroup::from_generators({perm(4, {{1, 2}}), perm(4, {{3, 4}})})));
  CHECK_FALSE(is_elementary_abelian_2(MatrixGroup::from_generators({perm(3, {{1, 2, 3}})})));
  CHECK_FALSE(is_elementary_abelian_2(rotation4()));
}

TEST_CASE("point and line stabilizers") {
  const MatrixGroup s3 = MatrixGroup::symmetric(3);
  CHECK(stabilizer_of_point(s3, qv({1, 1, 1})) == s3);
  CHECK(stabilizer_of_point(s3, qv({1, 2, 3})).order() == 1);
  CHECK(stabilizer_of_line(s3, Subspace::line_through(qv({1, -1, 0}))) ==
        MatrixGroup::from_generators({perm(3, {{1, 2}})}));
  CHECK_THROWS_AS(stabilizer_of_line(s3, Subspace::span(3, {qv({1, 0, 0}), qv({0, 1, 0})})),
                  ValidationError);
}

TEST_CASE("permutation matrices round-trip") {
  testsupport::Rng rng(31337);
  for (int i = 0; i < 50; ++i) {
    Permutation p(rng.integer(1, 6));
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = j;
    std::shuffle(p.begin(), p.end(), rng.engine());
    CHECK(as_permutation(permutation_matrix(p)) == p);
  }
  CHECK_FALSE(as_permutation(-QMatrix::identity(3)).has_value());
  CHECK_FALSE(as_permutation(QMatrix(2, 3)).has_value());
}

TEST_CASE("canonical element order is deterministic") {
  const MatrixGroup a = MatrixGroup::from_generators({perm(3, {{1, 2}}), perm(3, {{1, 2, 3}})});
  const MatrixGroup b = MatrixGroup::from_generators({perm(3, {{2, 3}}), perm(3, {{1, 3, 2}})});
  CHECK(a == b);  // same group, same canonical element list
  CHECK(a.elements().front().is_identity());
  for (std::size_t i = 2; i < a.order(); ++i)
    CHECK(matrix_less(a.elements()[i - 1], a.elements()[i]));
}

TEST_CASE("matgroup property laws (randomized)") {
  testsupport::Rng rng(988777);
  const std::vector<wonder::laws::Law> mlaws = {
      {"closure", wonder::laws::closure_is_closed},
      {"lagrange", wonder::laws::lagrange_for_enumerated_subgroups},
      {"span-decomposes", wonder::laws::invariant_span_decomposes},
      {"span-brute-force", wonder::laws::invariant_span_matches_brute_force},
      {"fixing-normal", wonder::laws::fixing_subgroup_normal_exponent_2},
      {"ea2-alpha", wonder::laws::ea2_iff_alpha_injective},
  };
  for (const auto& law : mlaws) {
    CAPTURE(law.name);
    for (int i = 0; i < 60; ++i) {
      auto failure = law.run(rng);
      if (failure) FAIL(law.name << ": " << *failure);
    }
  }
}
