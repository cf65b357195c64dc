#include "mcluster/derived/derived_category.hpp"

#include <algorithm>

#include "mcluster/errors.hpp"

namespace mcluster::derived {

std::string to_string(const DerivedObject& x) { return rep::to_string(x.module) + "[" + std::to_string(x.degree) + "]"; }

DerivedSum sorted(const DerivedSum& t) {
  DerivedSum out = t;
  std::sort(out.summands.begin(), out.summands.end(), [](const DerivedObject& x, const DerivedObject& y) {
    return std::tie(x.degree, x.module.a, x.module.b) < std::tie(y.degree, y.module.a, y.module.b);
  });
  return out;
}

DerivedCategory::DerivedCategory(Orientation o) : modules_(std::move(o)) {}

std::vector<GradedMorphism> DerivedCategory::hom_basis(const DerivedObject& x, const DerivedObject& y) const {
  const int gap = y.degree - x.degree;
  std::vector<GradedMorphism> out;
  if (gap != 0 && gap != 1) return out;
  for (auto& p : modules_.graded_basis(x.module, y.module, gap)) out.push_back(GradedMorphism{x, y, std::move(p)});
  return out;
}

std::size_t DerivedCategory::hom_dim(const DerivedObject& x, const DerivedObject& y) const {
  const int gap = y.degree - x.degree;
  if (gap == 0) return modules_.hom_dim(x.module, y.module);
  if (gap == 1) return modules_.ext_dim(x.module, y.module);
  return 0;
}

std::optional<GradedMorphism> DerivedCategory::compose(const GradedMorphism& g, const GradedMorphism& f) const {
  if (f.target != g.source)
    throw PreconditionError("compose: " + to_string(f.target) + " is not " + to_string(g.source));
  auto payload = modules_.graded_compose(g.payload, f.payload);
  if (!payload) return std::nullopt;
  return GradedMorphism{f.source, g.target, std::move(*payload)};
}

DerivedObject DerivedCategory::tau(const DerivedObject& x) const {
  if (rep::is_projective(orientation(), x.module)) {
    int i = rep::projective_vertex(orientation(), x.module);
    return {x.degree - 1, rep::indecomposable_injective(orientation(), i)};
  }
  return {x.degree, modules_.tau_module(x.module, rep::TauDirection::forward)};
}

DerivedObject DerivedCategory::tau_inverse(const DerivedObject& x) const {
  if (rep::is_injective(orientation(), x.module)) {
    int i = rep::injective_vertex(orientation(), x.module);
    return {x.degree + 1, rep::indecomposable_projective(orientation(), i)};
  }
  return {x.degree, modules_.tau_module(x.module, rep::TauDirection::inverse)};
}

DerivedObject DerivedCategory::tau_power(const DerivedObject& x, int k) const {
  DerivedObject y = x;
  for (; k > 0; --k) y = tau(y);
  for (; k < 0; ++k) y = tau_inverse(y);
  return y;
}

DerivedObject DerivedCategory::apply_F(const DerivedObject& x, int m, int power) const {
  if (m < 1) throw PreconditionError("apply_F: m must be at least 1");
  DerivedObject y = x;
  for (; power > 0; --power) y = shift(tau_inverse(y), m);
  for (; power < 0; ++power) y = tau(shift(y, -m));
  return y;
}

OrbitCoordinates DerivedCategory::coordinates(const DerivedObject& x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = coordinates_.find(x);
    if (it != coordinates_.end()) return it->second;
  }
  DerivedObject y = x;
  int z = 0;
  const int step = x.degree >= 0 ? 1 : -1;
  while (!(y.degree == 0 && is_projective(y))) {
    y = step > 0 ? tau(y) : tau_inverse(y);
    z += step;
  }
  OrbitCoordinates c{z, rep::projective_vertex(orientation(), y.module)};
  std::lock_guard<std::mutex> lock(mutex_);
  coordinates_.emplace(x, c);
  return c;
}

DerivedObject DerivedCategory::from_coordinates(const OrbitCoordinates& c) const {
  DerivedObject p{0, rep::indecomposable_projective(orientation(), c.vertex)};
  return tau_power(p, -c.z);
}

bool DerivedCategory::in_fundamental_domain(const DerivedObject& x, int m) const {
  if (m < 1) throw PreconditionError("in_fundamental_domain: m must be at least 1");
  if (x.degree >= 0 && x.degree <= m - 1) return true;
  return x.degree == m && is_projective(x);
}

const DerivedCategory& category_for(const Orientation& o) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::string>, std::unique_ptr<DerivedCategory>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{o.n(), o.word()}];
  if (!slot) slot = std::make_unique<DerivedCategory>(o);
  return *slot;
}

}  // namespace mcluster::derived
