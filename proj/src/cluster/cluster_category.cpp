#include "mcluster/cluster/cluster_category.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "mcluster/algebra/presentation.hpp"
#include "mcluster/derived/tilting.hpp"
#include "mcluster/errors.hpp"

namespace mcluster::cluster {

using algebra::SparseVector;
using algebra::Vector;
using derived::DerivedCategory;

OrbitRepresentative canonical_rep(const DerivedCategory& cat, const DerivedObject& x, int m) {
  if (m < 1) throw PreconditionError("canonical_rep: m must be at least 1");
  OrbitRepresentative r{x, 0};
  while (!cat.in_fundamental_domain(r.object, m)) {
    const int step = r.object.degree < 0 ? 1 : -1;
    r.object = cat.apply_F(r.object, m, step);
    r.power += step;
  }
  return r;
}

OrbitRepresentative canonical_rep(const rep::Orientation& o, const DerivedObject& x, int m) {
  return canonical_rep(derived::category_for(o), x, m);
}

std::size_t GradedHomSpace::dim() const {
  std::size_t d = 0;
  for (const auto& [i, basis] : components) d += basis.size();
  return d;
}

GradedHomSpace cluster_hom(const DerivedCategory& cat, const DerivedObject& x, const DerivedObject& y, int m) {
  if (m < 1) throw PreconditionError("cluster_hom: m must be at least 1");
  GradedHomSpace space{x, y, m, {}};
  auto add = [&](int i, const DerivedObject& z) {
    auto basis = cat.hom_basis(x, z);
    if (!basis.empty()) space.components[i] = std::move(basis);
  };
  // deg F^i Y is increasing in i; only degree gaps 0 and 1 carry morphisms
  DerivedObject z = y;
  for (int i = 0; z.degree <= x.degree + 1; ++i, z = cat.apply_F(z, m, 1))
    if (z.degree >= x.degree) add(i, z);
  z = cat.apply_F(y, m, -1);
  for (int i = -1; z.degree >= x.degree; --i, z = cat.apply_F(z, m, -1))
    if (z.degree <= x.degree + 1) add(i, z);
  return space;
}

ClusterTiltingCertificate is_m_cluster_tilting(const DerivedSum& t, int m) {
  const DerivedCategory& cat = derived::category_for(t.orientation);
  ClusterTiltingCertificate cert;
  std::vector<DerivedObject> reps;
  std::set<DerivedObject> seen;
  for (const auto& x : t.summands) {
    rep::check_interval(t.orientation, x.module);
    reps.push_back(canonical_rep(cat, x, m).object);
    if (!seen.insert(reps.back()).second) cert.issues.push_back("repeated orbit of " + derived::to_string(x));
  }
  if (seen.size() != t.n())
    cert.issues.push_back("expected " + std::to_string(t.n()) + " distinct orbits, found " + std::to_string(seen.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      for (int j = 1; j <= m; ++j)
        for (const auto& [i, basis] : cluster_hom(cat, reps[a], cat.shift(reps[b], j), m).components)
          cert.violations.push_back({j, a, b, i});
  cert.cluster_tilting = cert.issues.empty() && cert.violations.empty();
  return cert;
}

int GradedEndoAlgebra::max_grade() const {
  int g = 0;
  for (const auto& e : basis) g = std::max(g, e.grade);
  return g;
}

GradedEndoAlgebra orbit_endo_algebra(const DerivedSum& t, int m, std::optional<int> max_grade) {
  const DerivedCategory& cat = derived::category_for(t.orientation);
  const std::size_t k = t.summands.size();

  GradedEndoAlgebra out;
  std::vector<GradedMorphism> maps;
  std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> position;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (auto& [i, basis] : cluster_hom(cat, t.summands[a], t.summands[b], m).components) {
        if (i < 0)
          throw PreconditionError("Hom(" + derived::to_string(t.summands[a]) + ", F^" + std::to_string(i) + " " +
                                  derived::to_string(t.summands[b]) + ") is nonzero; grading would be negative");
        if (max_grade && i > *max_grade) continue;
        if (basis.size() != 1) throw InternalError("cluster_hom component of dimension " + std::to_string(basis.size()));
        position[{a, b, i}] = out.basis.size();
        out.basis.push_back({a, b, i, 0});
        maps.push_back(std::move(basis.front()));
      }
  const std::size_t d = out.basis.size();

  std::vector<std::string> labels;
  std::vector<int> grades;
  for (const auto& e : out.basis) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "c%02zu_%02zu_g%d", e.source + 1, e.target + 1, e.grade);
    labels.emplace_back(buf);
    grades.push_back(e.grade);
  }

  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const auto& g = out.basis[x];
      const auto& f = out.basis[y];
      if (f.target != g.source) continue;
      auto it = position.find({f.source, g.target, g.grade + f.grade});
      if (it == position.end()) continue;
      // transport g along F^{f.grade}, then compose in D^b
      const DerivedObject from = cat.apply_F(t.summands[g.source], m, f.grade);
      const DerivedObject to = cat.apply_F(t.summands[g.target], m, f.grade + g.grade);
      auto transported = cat.hom_basis(from, to);
      if (transported.size() != 1) throw InternalError("transported Hom is not one-dimensional");
      auto composite = cat.compose(transported.front(), maps[y]);
      if (composite && !composite->is_zero()) products[x][y].emplace_back(it->second, 1);
    }

  std::vector<Vector> idempotents;
  for (std::size_t a = 0; a < k; ++a) idempotents.push_back(algebra::unit_vector(d, position.at({a, a, 0})));
  out.algebra = algebra::StructureAlgebra(std::move(labels), std::move(products), std::move(idempotents), std::move(grades));
  auto issues = out.algebra.validate();
  if (!issues.empty()) throw InternalError("orbit endomorphism algebra: " + issues.front());
  return out;
}

GradedEndoAlgebra cluster_endo(const DerivedSum& t, int m) {
  derived::require_tilting(t);
  return orbit_endo_algebra(t, m);
}

GradedEndoAlgebra relation_extension(const DerivedSum& t, int m, std::optional<std::size_t> bound) {
  derived::require_tilting(t);
  derived::require_gldim_at_most_m_plus_1(t, m, bound);
  return orbit_endo_algebra(t, m, 1);
}

bool positive_square_zero(const GradedEndoAlgebra& c) {
  for (std::size_t x = 0; x < c.basis.size(); ++x)
    for (std::size_t y = 0; y < c.basis.size(); ++y)
      if (c.basis[x].grade > 0 && c.basis[y].grade > 0 && !c.algebra.product(x, y).empty()) return false;
  return true;
}

bool positive_square_zero(const DerivedSum& t, int m) { return positive_square_zero(cluster_endo(t, m)); }

GradedEndoAlgebra truncate_grades(const GradedEndoAlgebra& c, int max_grade) {
  std::vector<std::size_t> keep;
  std::vector<std::size_t> index(c.basis.size(), SIZE_MAX);
  for (std::size_t x = 0; x < c.basis.size(); ++x)
    if (c.basis[x].grade <= max_grade) {
      index[x] = keep.size();
      keep.push_back(x);
    }
  GradedEndoAlgebra out;
  std::vector<std::string> labels;
  std::vector<int> grades;
  for (std::size_t x : keep) {
    out.basis.push_back(c.basis[x]);
    labels.push_back(c.algebra.label(x));
    grades.push_back(c.basis[x].grade);
  }
  std::vector<std::vector<SparseVector>> products(keep.size(), std::vector<SparseVector>(keep.size()));
  for (std::size_t x = 0; x < keep.size(); ++x)
    for (std::size_t y = 0; y < keep.size(); ++y)
      for (const auto& [z, coef] : c.algebra.product(keep[x], keep[y]))
        if (index[z] != SIZE_MAX) products[x][y].emplace_back(index[z], coef);
  std::vector<Vector> idempotents;
  for (const auto& e : c.algebra.idempotents()) {
    Vector v = algebra::zero_vector(keep.size());
    for (std::size_t x = 0; x < keep.size(); ++x) v[x] = e[keep[x]];
    idempotents.push_back(std::move(v));
  }
  out.algebra = algebra::StructureAlgebra(std::move(labels), std::move(products), std::move(idempotents), std::move(grades));
  return out;
}

namespace {

std::multiset<std::pair<int, int>> arrow_pairs(const algebra::Quiver& q) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& a : q.arrows()) out.insert({a.source, a.target});
  return out;
}

}  // namespace

TruncationReport truncation_check(const DerivedSum& t, int m, std::optional<std::size_t> bound) {
  GradedEndoAlgebra c = cluster_endo(t, m);
  GradedEndoAlgebra r = relation_extension(t, m, bound);
  TruncationReport report;
  report.same_quiver = arrow_pairs(algebra::quiver_of(c.algebra).quiver) == arrow_pairs(algebra::quiver_of(r.algebra).quiver);

  GradedEndoAlgebra q = truncate_grades(c, 1);
  bool match = q.algebra.labels() == r.algebra.labels() && q.algebra.idempotents() == r.algebra.idempotents();
  for (std::size_t x = 0; match && x < q.algebra.dim(); ++x)
    for (std::size_t y = 0; match && y < q.algebra.dim(); ++y) match = q.algebra.product(x, y) == r.algebra.product(x, y);
  report.truncation_matches = match;

  auto powers = algebra::radical_powers(c.algebra);
  algebra::Span rad2(c.algebra.dim());
  if (powers.size() >= 2)
    for (const auto& v : powers[1]) rad2.add(v);
  report.kernel_in_rad2 = true;
  for (std::size_t x = 0; x < c.basis.size(); ++x)
    if (c.basis[x].grade >= 2 && !rad2.contains(c.algebra.basis_vector(x))) report.kernel_in_rad2 = false;
  return report;
}

}  // namespace mcluster::cluster
