#include "mcluster/derived/tilting.hpp"

#include <cstdio>
#include <set>

#include "mcluster/algebra/modules.hpp"
#include "mcluster/errors.hpp"

namespace mcluster::derived {

using algebra::Rational;
using algebra::SparseVector;
using algebra::Vector;

TiltingCertificate is_tilting_complex(const DerivedSum& t) {
  const DerivedCategory& cat = category_for(t.orientation);
  TiltingCertificate cert;
  for (const auto& x : t.summands) rep::check_interval(t.orientation, x.module);
  if (t.summands.size() != t.n())
    cert.issues.push_back("expected " + std::to_string(t.n()) + " summands, found " + std::to_string(t.summands.size()));
  std::set<DerivedObject> seen;
  for (const auto& x : t.summands)
    if (!seen.insert(x).second) cert.issues.push_back("repeated summand " + to_string(x));

  // Hom(T_a, T_b[i]) can only be nonzero when the degree gap is 0 or 1.
  for (std::size_t a = 0; a < t.summands.size(); ++a)
    for (std::size_t b = 0; b < t.summands.size(); ++b) {
      const int base = t.summands[a].degree - t.summands[b].degree;
      for (int i : {base, base + 1}) {
        if (i == 0) continue;
        if (cat.hom_dim(t.summands[a], cat.shift(t.summands[b], i)) != 0) cert.violations.push_back({i, a, b});
      }
    }
  cert.tilting = cert.issues.empty() && cert.violations.empty();
  return cert;
}

std::string describe(const TiltingCertificate& c, const DerivedSum& t) {
  if (c.tilting) return "tilting";
  std::string out;
  for (const auto& issue : c.issues) out += issue + "; ";
  for (const auto& v : c.violations)
    out += "Hom(" + to_string(t.summands[v.source]) + ", " + to_string(t.summands[v.target]) + "[" + std::to_string(v.shift) +
           "]) != 0; ";
  if (out.size() >= 2) out.resize(out.size() - 2);
  return out;
}

void require_tilting(const DerivedSum& t) {
  auto cert = is_tilting_complex(t);
  if (!cert.tilting) throw PreconditionError("not a tilting complex: " + describe(cert, t));
}

void require_gldim_at_most_m_plus_1(const DerivedSum& t, int m, std::optional<std::size_t> bound) {
  const std::size_t limit = bound.value_or(2 * static_cast<std::size_t>(m) + 4);
  auto g = algebra::global_dimension(endo_algebra(t), limit);
  if (!g || *g > static_cast<std::size_t>(m) + 1)
    throw PreconditionError("requires gldim End(T) <= " + std::to_string(m + 1) + ", found " +
                            (g ? std::to_string(*g) : "> " + std::to_string(limit)));
}

algebra::StructureAlgebra endo_algebra(const DerivedSum& t) {
  require_tilting(t);
  const DerivedCategory& cat = category_for(t.orientation);
  const std::size_t k = t.summands.size();

  struct Element {
    std::size_t source, target, index;
    GradedMorphism map;
  };
  std::vector<Element> basis;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> offset;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      offset[{a, b}] = basis.size();
      auto homs = cat.hom_basis(t.summands[a], t.summands[b]);
      for (std::size_t i = 0; i < homs.size(); ++i) basis.push_back({a, b, i, std::move(homs[i])});
    }
  const std::size_t d = basis.size();

  std::vector<std::string> labels;
  for (const auto& e : basis) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "x%02zu_%02zu_%zu", e.source + 1, e.target + 1, e.index);
    labels.emplace_back(buf);
  }

  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      if (basis[y].target != basis[x].source) continue;
      auto composite = cat.compose(basis[x].map, basis[y].map);
      if (!composite) continue;
      const std::size_t base = offset[{basis[y].source, basis[x].target}];
      for (std::size_t c = 0; c < composite->payload.coords.size(); ++c)
        if (composite->payload.coords[c] != 0) products[x][y].emplace_back(base + c, composite->payload.coords[c]);
    }

  std::vector<Vector> idempotents;
  for (std::size_t a = 0; a < k; ++a) {
    const Interval& m = t.summands[a].module;
    Vector coords = cat.modules().hom_coordinates(m, m, rep::identity_map(cat.modules().rep(m)));
    Vector e = algebra::zero_vector(d);
    for (std::size_t c = 0; c < coords.size(); ++c) e[offset[{a, a}] + c] = coords[c];
    idempotents.push_back(std::move(e));
  }
  algebra::StructureAlgebra result(std::move(labels), std::move(products), std::move(idempotents));
  return result;
}

std::set<int> ext_profile(const DerivedSum& t, int window) {
  const DerivedCategory& cat = category_for(t.orientation);
  std::set<int> profile;
  for (const auto& a : t.summands) {
    const DerivedObject source = cat.shift(cat.tau(a), 1);
    for (const auto& b : t.summands)
      for (int i = -window; i <= window; ++i)
        if (cat.hom_dim(source, cat.shift(b, i)) != 0) profile.insert(i);
  }
  return profile;
}

}  // namespace mcluster::derived
