#include <doctest.h>

#include "mcluster/algebra/gentle.hpp"
#include "mcluster/algebra/isomorphism.hpp"
#include "mcluster/algebra/modules.hpp"
#include "mcluster/algebra/presentation.hpp"
#include "mcluster/algebra/presentation_io.hpp"
#include "mcluster/errors.hpp"
#include "support/algebra_builders.hpp"

using namespace mcluster::algebra;
using namespace testsupport;

namespace {

Presentation loop_algebra() {
  return make_presentation({1}, {Arrow{"x", 1, 1, std::nullopt}}, {{"x", "x"}});
}

Presentation commutative_square() {
  Presentation p = make_presentation({1, 2, 3, 4}, {Arrow{"a", 1, 2, std::nullopt}, Arrow{"b", 2, 4, std::nullopt},
                                                    Arrow{"c", 1, 3, std::nullopt}, Arrow{"d", 3, 4, std::nullopt}});
  p.relations.push_back(Relation{{Term{1, {"a", "b"}}, Term{-1, {"c", "d"}}}});
  return p;
}

}  // namespace

TEST_CASE("quiver of k x k has two vertices and no arrows") {
  auto a = algebra_from_presentation(make_presentation({1, 2}, {}));
  auto q = quiver_of(a);
  CHECK(q.quiver.num_vertices() == 2);
  CHECK(q.quiver.num_arrows() == 0);
}

TEST_CASE("quiver of the dual numbers is one loop") {
  auto q = quiver_of(algebra_from_presentation(loop_algebra()));
  REQUIRE(q.quiver.num_arrows() == 1);
  CHECK(q.quiver.arrow(0).source == q.quiver.arrow(0).target);
}

TEST_CASE("quiver of the path algebra of 1 -> 2") {
  auto q = quiver_of(algebra_from_presentation(linear_quiver(2)));
  REQUIRE(q.quiver.num_arrows() == 1);
  CHECK(q.quiver.arrow(0).source == 1);
  CHECK(q.quiver.arrow(0).target == 2);
}

TEST_CASE("non-local corner is rejected") {
  // full 2x2 matrices with a single idempotent
  std::vector<std::vector<SparseVector>> prod(4, std::vector<SparseVector>(4));
  auto idx = [](int r, int c) { return static_cast<std::size_t>(2 * r + c); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) prod[idx(i, j)][idx(j, k)] = {{idx(i, k), 1}};
  StructureAlgebra m2({"e11", "e12", "e21", "e22"}, prod, {Vector{1, 0, 0, 1}});
  CHECK(m2.validate().empty());
  CHECK_THROWS_AS(quiver_of(m2), mcluster::PreconditionError);
}

TEST_CASE("monomial relation round-trips through presentation") {
  auto p = linear_quiver(3, {{"a1", "a2"}});
  auto a = algebra_from_presentation(p);
  CHECK(a.dim() == 5);
  auto q = present(a);
  REQUIRE(q.relations.size() == 1);
  CHECK(q.relations[0].is_monomial());
  CHECK(q.relations[0].terms[0].path.size() == 2);
  CHECK(presentation_iso(p, q).verdict == IsoVerdict::isomorphic);
}

TEST_CASE("hereditary algebras have no relations") {
  CHECK(present(algebra_from_presentation(linear_quiver(4))).relations.empty());
  auto q = present(algebra_from_presentation(make_presentation(
      {1, 2, 3}, {Arrow{"a", 2, 1, std::nullopt}, Arrow{"b", 2, 3, std::nullopt}})));
  CHECK(q.relations.empty());
}

TEST_CASE("commutative square presents with one binomial relation") {
  auto a = algebra_from_presentation(commutative_square());
  CHECK(a.dim() == 4 + 4 + 1);
  auto q = present(a);
  REQUIRE(q.relations.size() == 1);
  CHECK(q.relations[0].terms.size() == 2);
}

TEST_CASE("presentation round-trip preserves dimension and Cartan matrix") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Presentation p = random_monomial_presentation(rng);
    StructureAlgebra base = algebra_from_presentation(p);
    StructureAlgebra a = change_basis(base, random_invertible(base.dim(), rng));
    Presentation q = present(a);
    StructureAlgebra rebuilt = algebra_from_presentation(q);
    CHECK(rebuilt.dim() == a.dim());
    CHECK(cartan_matrix(rebuilt) == cartan_matrix(a));
    CHECK(same_quiver(p.quiver, q.quiver));
    for (const auto& r : q.relations)
      for (const auto& t : r.terms) CHECK(t.path.size() >= 2);
  }
}

TEST_CASE("global dimension examples") {
  CHECK(global_dimension(algebra_from_presentation(linear_quiver(4)), 10) == std::optional<std::size_t>(1));
  CHECK(global_dimension(algebra_from_presentation(make_presentation({1, 2}, {})), 10) == std::optional<std::size_t>(0));
  CHECK_FALSE(global_dimension(algebra_from_presentation(loop_algebra()), 10).has_value());
  // linear A_n with all length-2 relations: gldim n-1
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<std::string>> rels;
    for (int i = 1; i + 1 < n; ++i) rels.push_back({"a" + std::to_string(i), "a" + std::to_string(i + 1)});
    auto a = algebra_from_presentation(linear_quiver(n, rels));
    CHECK(global_dimension(a, 10) == std::optional<std::size_t>(n - 1));
    CHECK_FALSE(global_dimension(a, n - 2).has_value());
  }
}

TEST_CASE("global dimension 1 iff the radical is projective") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = algebra_from_presentation(random_monomial_presentation(rng));
    auto gd = global_dimension(a, 12);
    REQUIRE(gd);
    bool rad_projective = true;
    for (std::size_t j = 0; j < a.num_idempotents(); ++j) {
      RightModule r = free_module(a, {j});
      r.basis.clear();
      Span s(a.dim());
      for (const auto& x : radical_basis(a)) {
        auto v = a.multiply(a.idempotent(j), x);
        if (s.add(v)) r.basis.push_back(v);
      }
      if (r.dim() > 0 && projective_dimension(a, r, 0) != std::optional<std::size_t>(0)) rad_projective = false;
    }
    CHECK((*gd <= 1) == rad_projective);
    CHECK((*gd == 0) == radical_basis(a).empty());
  }
}

TEST_CASE("presentation isomorphism") {
  auto p = linear_quiver(3, {{"a1", "a2"}});
  CHECK(presentation_iso(p, p).verdict == IsoVerdict::isomorphic);
  auto q = linear_quiver(3);
  CHECK(presentation_iso(p, q).verdict == IsoVerdict::not_isomorphic);
  CHECK(presentation_iso(q, p).verdict == IsoVerdict::not_isomorphic);
  // relabeled copy: 3 -> 1 -> 2 with arrows renamed
  auto r = make_presentation({1, 2, 3}, {Arrow{"x", 1, 2, std::nullopt}, Arrow{"y", 3, 1, std::nullopt}}, {{"y", "x"}});
  auto res = presentation_iso(p, r);
  REQUIRE(res.verdict == IsoVerdict::isomorphic);
  CHECK(res.vertex_map.at(1) == 3);
  CHECK(res.arrow_map.at("a1") == "y");
  CHECK(presentation_iso(commutative_square(), commutative_square()).verdict == IsoVerdict::inconclusive);
  auto square_zero = make_presentation({1, 2, 3, 4}, {Arrow{"a", 1, 2, std::nullopt}, Arrow{"b", 2, 4, std::nullopt},
                                                      Arrow{"c", 1, 3, std::nullopt}, Arrow{"d", 3, 4, std::nullopt}},
                                       {{"a", "b"}, {"c", "d"}});
  CHECK(presentation_iso(commutative_square(), square_zero).verdict == IsoVerdict::not_isomorphic);
}

TEST_CASE("redundant monomial relations do not affect isomorphism") {
  auto p = linear_quiver(4, {{"a1", "a2"}});
  auto q = linear_quiver(4, {{"a1", "a2"}, {"a1", "a2", "a3"}});
  CHECK(presentation_iso(p, q).verdict == IsoVerdict::isomorphic);
}

TEST_CASE("gentle report") {
  auto lin = is_gentle_with_cycles(linear_quiver(5), 2);
  CHECK(lin.gentle);
  CHECK(lin.cycles.empty());
  CHECK(lin.cycle_compliant);

  auto sq = is_gentle_with_cycles(commutative_square(), 1);
  CHECK_FALSE(sq.gentle);
  CHECK_FALSE(sq.monomial_quadratic);

  // oriented 3-cycle with full relations, m = 1
  auto tri = make_presentation({1, 2, 3}, {Arrow{"a", 1, 2, std::nullopt}, Arrow{"b", 2, 3, std::nullopt}, Arrow{"c", 3, 1, std::nullopt}},
                               {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto t = is_gentle_with_cycles(tri, 1);
  CHECK(t.gentle);
  CHECK(t.cycles.size() == 1);
  CHECK(t.cycle_compliant);
  CHECK_FALSE(is_gentle_with_cycles(tri, 2).cycle_compliant);

  tri.relations.pop_back();
  auto partial = is_gentle_with_cycles(tri, 1);
  CHECK(partial.cycles_of_expected_length);
  CHECK_FALSE(partial.cycles_fully_related);
}

TEST_CASE("emit and parse") {
  Presentation empty;
  CHECK(emit(empty, "json") == "{\"vertices\":[],\"arrows\":[],\"relations\":[]}\n");
  CHECK(parse_presentation(emit(empty, "dot")) == empty);

  auto p = linear_quiver(2);
  std::string dot = emit(p, "dot");
  CHECK(dot.find("1 -> 2 [label=\"a1\"]") != std::string::npos);
  CHECK(parse_presentation(dot) == p);

  auto r = linear_quiver(3, {{"a1", "a2"}});
  r.relations.push_back(Relation{{Term{Rational(-3, 2), {"a1", "a2"}}}});
  r.relations.pop_back();
  std::string rd = emit(r, "dot");
  CHECK(rd.find("style=dashed") != std::string::npos);
  CHECK(parse_presentation(rd) == r);
  CHECK(parse_presentation(emit(r, "json")) == r);
  CHECK(parse_presentation(emit(commutative_square(), "json")) == commutative_square());
  CHECK_THROWS_AS(emit(r, "svg"), mcluster::PreconditionError);
}

TEST_CASE("parse errors carry JSON paths") {
  try {
    parse_presentation(R"({"vertices":[1,2],"arrows":[{"id":"a","from":1,"to":3}],"relations":[]})");
    FAIL("expected a parse error");
  } catch (const mcluster::ParseError& e) {
    CHECK(e.path() == "/arrows/0/to");
  }
  try {
    parse_presentation(R"({"vertices":[1,2],"arrows":[{"id":"a","from":1,"to":2}],"relations":[{"terms":[{"coef":"1/0","path":["a","a"]}]}]})");
    FAIL("expected a parse error");
  } catch (const mcluster::ParseError& e) {
    CHECK(e.path() == "/relations/0/terms/0/coef");
  }
  CHECK_THROWS_AS(parse_presentation("{"), mcluster::ParseError);
}
