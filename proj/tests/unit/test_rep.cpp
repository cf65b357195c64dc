#include <doctest.h>

#include <random>

#include "mcluster/errors.hpp"
#include "mcluster/rep/interval_category.hpp"
#include "support/extension_oracle.hpp"
#include "support/hom_oracle.hpp"

using namespace mcluster::rep;
using mcluster::algebra::Matrix;
using mcluster::algebra::Rational;
using mcluster::algebra::Vector;

namespace {

using testsupport::all_orientations;
using testsupport::euler_form;
using testsupport::hom_dim_oracle;

Matrix power(const Matrix& m, int k) {
  Matrix out = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

TEST_CASE("indecomposable projectives and injectives") {
  Orientation lin = Orientation::linear(3);
  CHECK(indecomposable_projective(lin, 1) == Interval{1, 3});
  CHECK(indecomposable_projective(lin, 3) == Interval{3, 3});
  CHECK(indecomposable_injective(lin, 3) == Interval{1, 3});
  Orientation lr(3, "LR");  // 1 <- 2 -> 3
  CHECK(indecomposable_projective(lr, 2) == Interval{1, 3});
  CHECK(indecomposable_projective(lr, 1) == Interval{1, 1});
  CHECK(indecomposable_injective(lr, 1) == Interval{1, 2});
  CHECK_THROWS_AS(indecomposable_projective(lin, 4), mcluster::PreconditionError);
  CHECK_THROWS_AS(Orientation(3, "RX"), mcluster::PreconditionError);
}

TEST_CASE("hom examples") {
  Orientation a2 = Orientation::linear(2);
  CHECK(hom_basis(a2, {2, 2}, {1, 2}).size() == 1);
  CHECK(hom_basis(a2, {1, 2}, {2, 2}).empty());
  CHECK(hom_basis(Orientation::linear(4), {1, 1}, {3, 4}).empty());
  for (const auto& x : all_intervals(4)) {
    auto b = hom_basis(Orientation::linear(4), x, x);
    REQUIRE(b.size() == 1);
  }
}

TEST_CASE("hom dimensions match the scalar oracle, all orientations n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& o : all_orientations(n))
      for (const auto& m : all_intervals(n))
        for (const auto& x : all_intervals(n)) {
          auto basis = hom_basis(o, m, x);
          CHECK(basis.size() == hom_dim_oracle(o, m, x));
          CHECK(basis.size() <= 1);
          for (const auto& f : basis) CHECK(is_morphism(f, interval_rep(o, m), interval_rep(o, x)));
        }
}

TEST_CASE("linear orientation hom rule") {
  // Hom([a,b],[c,d]) != 0 iff c <= a <= d <= b
  Orientation o = Orientation::linear(5);
  for (const auto& m : all_intervals(5))
    for (const auto& x : all_intervals(5))
      CHECK((hom_basis(o, m, x).size() == 1) == (x.a <= m.a && m.a <= x.b && x.b <= m.b));
}

TEST_CASE("projective presentations") {
  Orientation a2 = Orientation::linear(2);
  auto p = proj_presentation(a2, {1, 2});
  CHECK(p.p1.empty());
  CHECK(p.p0 == std::vector<int>{1});
  auto s = proj_presentation(a2, {1, 1});
  CHECK(s.p0 == std::vector<int>{1});
  CHECK(s.p1 == std::vector<int>{2});
  auto q = proj_presentation(Orientation::linear(3), {1, 2});
  CHECK(q.p0 == std::vector<int>{1});
  CHECK(q.p1 == std::vector<int>{3});
  // two sources: [1,3] in 1 -> 2 <- 3
  auto two = proj_presentation(Orientation(3, "RL"), {1, 3});
  CHECK(two.p0 == std::vector<int>{1, 3});
  CHECK(two.p1 == std::vector<int>{2});
}

TEST_CASE("ext examples") {
  IntervalCategory cat(Orientation::linear(2));
  CHECK(cat.ext1_basis({1, 1}, {2, 2}).size() == 1);
  CHECK(cat.ext1_basis({2, 2}, {1, 1}).empty());
  CHECK(cat.ext1_basis({1, 2}, {2, 2}).empty());
}

TEST_CASE("hom minus ext is the Euler form, all orientations n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& o : all_orientations(n)) {
      IntervalCategory cat(o);
      for (const auto& m : all_intervals(n))
        for (const auto& x : all_intervals(n))
          CHECK(static_cast<long>(cat.hom_dim(m, x)) - static_cast<long>(cat.ext_dim(m, x)) == euler_form(o, m, x));
    }
}

TEST_CASE("tau via the Coxeter matrix") {
  IntervalCategory a2(Orientation::linear(2));
  CHECK(a2.coxeter().phi * Vector{1, 0} == Vector{0, 1});
  CHECK(a2.tau_module({1, 1}, TauDirection::forward) == Interval{2, 2});
  CHECK_THROWS_AS(a2.tau_module({2, 2}, TauDirection::forward), BoundaryError);
  CHECK_THROWS_AS(a2.tau_module({1, 2}, TauDirection::inverse), BoundaryError);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& o : all_orientations(n)) {
      IntervalCategory cat(o);
      const Matrix& phi = cat.coxeter().phi;
      CHECK(power(phi, static_cast<int>(n + 1)) == Matrix::identity(n));
      for (const auto& m : all_intervals(n)) {
        if (!is_projective(o, m)) {
          Interval t = cat.tau_module(m, TauDirection::forward);
          CHECK(cat.tau_module(t, TauDirection::inverse) == m);
          // Auslander-Reiten formula for hereditary algebras
          for (const auto& x : all_intervals(n)) CHECK(cat.ext_dim(m, x) == cat.hom_dim(x, t));
        } else {
          int i = projective_vertex(o, m);
          Vector injective = cat.dimension_vector(indecomposable_injective(o, i));
          for (auto& x : injective) x = -x;
          CHECK(cat.coxeter().phi * cat.dimension_vector(m) == injective);
        }
      }
    }
}

TEST_CASE("decompose") {
  Orientation o(4, "RLR");
  CHECK(decompose(interval_rep(o, {2, 3})) == std::vector<Interval>{{2, 3}});
  auto block = direct_sum(o, {interval_rep(o, {1, 2}), interval_rep(o, {1, 1})});
  CHECK(decompose(block) == std::vector<Interval>{{1, 1}, {1, 2}});

  Orientation a2 = Orientation::linear(2);
  auto cover = projective_cover(interval_rep(a2, {1, 1}));
  auto k = kernel_of(cover.map, cover.projective);
  CHECK(decompose(k.rep) == std::vector<Interval>{{2, 2}});

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 9), coef(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    auto intervals = all_intervals(4);
    std::vector<Interval> chosen;
    std::vector<Representation> parts;
    int count = 1 + pick(rng) % 4;
    for (int i = 0; i < count; ++i) {
      chosen.push_back(intervals[static_cast<std::size_t>(pick(rng))]);
      parts.push_back(interval_rep(o, chosen.back()));
    }
    std::sort(chosen.begin(), chosen.end());
    Representation x = direct_sum(o, parts);
    // conjugate by random invertible base changes at every vertex
    std::vector<Matrix> change;
    for (auto d : x.dims) {
      Matrix g(d, d);
      do {
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) g(r, c) = coef(rng);
      } while (mcluster::algebra::rank(g) != d);
      change.push_back(g);
    }
    for (std::size_t k2 = 0; k2 < o.num_arrows(); ++k2) {
      auto s = static_cast<std::size_t>(o.arrow_source(k2) - 1), t = static_cast<std::size_t>(o.arrow_target(k2) - 1);
      x.maps[k2] = change[t] * x.maps[k2] * mcluster::algebra::inverse(change[s]);
    }
    CHECK(decompose(x) == chosen);
  }
}

TEST_CASE("graded composition: identities and Yoneda products") {
  IntervalCategory cat(Orientation::linear(3));
  auto id = cat.graded_basis({1, 2}, {1, 2}, 0).at(0);
  auto h = cat.graded_basis({1, 2}, {1, 1}, 0).at(0);
  auto composite = cat.graded_compose(h, id);
  REQUIRE(composite);
  CHECK(composite->coords == h.coords);

  auto e = cat.graded_basis({1, 1}, {2, 2}, 1).at(0);
  auto eh = cat.graded_compose(e, h);
  REQUIRE(eh);
  CHECK(eh->shift == 1);
  CHECK(eh->is_zero());  // Ext^1([1,2],[2,2]) = 0
  CHECK_THROWS_AS(cat.graded_compose(h, h), mcluster::PreconditionError);

  // Ext ∘ Ext vanishes
  IntervalCategory a3(Orientation::linear(3));
  auto e12 = a3.graded_basis({1, 1}, {2, 2}, 1).at(0);
  auto e23 = a3.graded_basis({2, 2}, {3, 3}, 1).at(0);
  CHECK_FALSE(a3.graded_compose(e23, e12).has_value());
}

TEST_CASE("graded composition agrees with pullbacks and pushouts of extensions, n <= 4") {
  using namespace testsupport;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& o : all_orientations(n)) {
      IntervalCategory cat(o);
      auto intervals = all_intervals(n);
      for (const auto& m : intervals)
        for (const auto& x : intervals)
          for (const auto& e : cat.graded_basis(m, x, 1)) {
            Extension ext = extension_from_lift(cat, m, x, e.map);
            CHECK_FALSE(splits(ext.middle, m, x));
            for (const auto& m2 : intervals)
              for (const auto& h : cat.graded_basis(m2, m, 0)) {
                auto c = cat.graded_compose(e, h);
                REQUIRE(c);
                CHECK(c->is_zero() == splits(pullback_middle(cat, ext, m2, h.map), m2, x));
              }
            for (const auto& x2 : intervals)
              for (const auto& g : cat.graded_basis(x, x2, 0)) {
                auto c = cat.graded_compose(g, e);
                REQUIRE(c);
                CHECK(c->is_zero() == splits(pushout_middle(cat, ext, x, x2, g.map), m, x2));
              }
          }
    }
}

TEST_CASE("graded composition is associative, n <= 4") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& o : all_orientations(n)) {
      IntervalCategory cat(o);
      auto intervals = all_intervals(n);
      auto basis = [&](Interval s, Interval t) {
        auto out = cat.graded_basis(s, t, 0);
        auto ext = cat.graded_basis(s, t, 1);
        out.insert(out.end(), ext.begin(), ext.end());
        return out;
      };
      for (const auto& a : intervals)
        for (const auto& b : intervals)
          for (const auto& f : basis(a, b))
            for (const auto& c : intervals)
              for (const auto& g : basis(b, c)) {
                auto gf = cat.graded_compose(g, f);
                for (const auto& d : intervals)
                  for (const auto& h : basis(c, d)) {
                    auto hg = cat.graded_compose(h, g);
                    auto left = gf ? cat.graded_compose(h, *gf) : std::nullopt;
                    auto right = hg ? cat.graded_compose(*hg, f) : std::nullopt;
                    bool left_zero = !left || left->is_zero();
                    bool right_zero = !right || right->is_zero();
                    REQUIRE(left_zero == right_zero);
                    if (!left_zero) CHECK(left->coords == right->coords);
                  }
              }
    }
}
