#include "mcluster/rep/interval_category.hpp"

namespace mcluster::rep {
namespace {

template <class Cache, class Key, class Compute>
const auto& memoize(std::mutex& mutex, Cache& cache, const Key& key, Compute&& compute) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = compute();
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::make_unique<decltype(value)>(std::move(value)));
  return *it->second;
}

Matrix flattened_columns(const std::vector<ModuleMap>& maps, std::size_t length) {
  std::vector<Vector> cols;
  for (const auto& m : maps) cols.push_back(m.flatten());
  return Matrix::from_columns(length, cols);
}

std::size_t flat_length(const Representation& s, const Representation& t) {
  std::size_t len = 0;
  for (std::size_t v = 0; v < s.dims.size(); ++v) len += s.dims[v] * t.dims[v];
  return len;
}

/// Some h in span(basis) with post ∘ h = target.
ModuleMap lift_through(const std::vector<ModuleMap>& basis, const ModuleMap& post, const ModuleMap& target,
                       const Representation& source, const Representation& middle, const char* what) {
  std::vector<ModuleMap> images;
  for (const auto& h : basis) images.push_back(compose(post, h));
  Vector t = target.flatten();
  auto x = algebra::solve(flattened_columns(images, t.size()), t);
  if (!x) throw InternalError(std::string("lift failed: ") + what);
  return combine(basis, *x, source, middle);
}

}  // namespace

IntervalCategory::IntervalCategory(Orientation o) : orientation_(std::move(o)) {
  const std::size_t n = orientation_.n();
  coxeter_.cartan = Matrix(n, n);
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    Interval p = indecomposable_projective(orientation_, i);
    for (int v = p.a; v <= p.b; ++v) coxeter_.cartan(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(i - 1)) = 1;
  }
  coxeter_.phi = -(coxeter_.cartan.transpose() * algebra::inverse(coxeter_.cartan));
  coxeter_.phi_inverse = algebra::inverse(coxeter_.phi);
}

const Representation& IntervalCategory::rep(const Interval& x) const {
  return memoize(mutex_, reps_, x, [&] { return interval_rep(orientation_, x); });
}

const ProjPresentation& IntervalCategory::presentation(const Interval& m) const {
  return memoize(mutex_, presentations_, m, [&] {
    ProjPresentation p;
    p.module = m;
    const Representation& mod = rep(m);
    Cover top = projective_cover(mod);
    Kernel k = kernel_of(top.map, top.projective);
    Cover second = projective_cover(k.rep);
    if (second.projective.dims != k.rep.dims) throw InternalError("proj_presentation: syzygy is not projective");
    p.p0 = top.tops;
    p.p1 = second.tops;
    p.p0_rep = top.projective;
    p.p1_rep = second.projective;
    p.cover = top.map;
    p.differential = compose(k.inclusion, second.map);
    for (std::size_t v = 0; v < orientation_.n(); ++v) {
      if (p.p0_rep.dims[v] != mod.dims[v] + p.p1_rep.dims[v])
        throw InternalError("proj_presentation: dimension count fails");
      if (algebra::rank(p.differential.comps[v]) != p.p1_rep.dims[v] || algebra::rank(p.cover.comps[v]) != mod.dims[v])
        throw InternalError("proj_presentation: sequence is not exact");
    }
    return p;
  });
}

const std::vector<ModuleMap>& IntervalCategory::hom(const Interval& m, const Interval& n) const {
  return memoize(mutex_, homs_, std::make_pair(m, n), [&] { return hom_basis(rep(m), rep(n)); });
}

const IntervalCategory::ExtData& IntervalCategory::ext_data(const Interval& m, const Interval& n) const {
  return memoize(mutex_, exts_, std::make_pair(m, n), [&] {
    const ProjPresentation& p = presentation(m);
    const Representation& target = rep(n);
    std::vector<ModuleMap> image;
    for (const auto& h : hom_basis(p.p0_rep, target)) image.push_back(compose(h, p.differential));
    const std::size_t len = flat_length(p.p1_rep, target);
    algebra::Span span(len);
    std::vector<ModuleMap> independent_image;
    for (const auto& im : image)
      if (span.add(im.flatten())) independent_image.push_back(im);
    ExtData data;
    for (const auto& q : hom_basis(p.p1_rep, target))
      if (span.add(q.flatten())) data.reps.push_back(q);
    std::vector<ModuleMap> cols = data.reps;
    cols.insert(cols.end(), independent_image.begin(), independent_image.end());
    data.system = flattened_columns(cols, len);
    return data;
  });
}

std::size_t IntervalCategory::ext_dim(const Interval& m, const Interval& n) const { return ext_data(m, n).reps.size(); }

std::vector<Ext1Class> IntervalCategory::ext1_basis(const Interval& m, const Interval& n) const {
  const ExtData& data = ext_data(m, n);
  std::vector<Ext1Class> out;
  for (std::size_t k = 0; k < data.reps.size(); ++k)
    out.push_back(Ext1Class{m, n, data.reps[k], algebra::unit_vector(data.reps.size(), k)});
  return out;
}

Vector IntervalCategory::hom_coordinates(const Interval& m, const Interval& n, const ModuleMap& f) const {
  const auto& basis = hom(m, n);
  Vector t = f.flatten();
  auto x = algebra::solve(flattened_columns(basis, t.size()), t);
  if (!x) throw PreconditionError("hom_coordinates: map is not a morphism " + to_string(m) + " -> " + to_string(n));
  return *x;
}

Vector IntervalCategory::ext_coordinates(const Interval& m, const Interval& n, const ModuleMap& lift) const {
  const ExtData& data = ext_data(m, n);
  auto x = algebra::solve(data.system, lift.flatten());
  if (!x) throw PreconditionError("ext_coordinates: not a morphism P1(" + to_string(m) + ") -> " + to_string(n));
  return Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(data.reps.size()));
}

ModuleMap IntervalCategory::ext_representative(const Interval& m, const Interval& n, const Vector& coords) const {
  const ExtData& data = ext_data(m, n);
  return combine(data.reps, coords, presentation(m).p1_rep, rep(n));
}

std::vector<GradedModuleMap> IntervalCategory::graded_basis(const Interval& m, const Interval& n, int shift) const {
  std::vector<GradedModuleMap> out;
  if (shift == 0) {
    const auto& basis = hom(m, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
      out.push_back(GradedModuleMap{m, n, 0, basis[k], algebra::unit_vector(basis.size(), k)});
  } else if (shift == 1) {
    const auto& reps = ext_data(m, n).reps;
    for (std::size_t k = 0; k < reps.size(); ++k)
      out.push_back(GradedModuleMap{m, n, 1, reps[k], algebra::unit_vector(reps.size(), k)});
  }
  return out;
}

const std::vector<ModuleMap>& IntervalCategory::syzygy_lifts(const Interval& m, const Interval& n) const {
  return memoize(mutex_, lifts_, std::make_pair(m, n), [&] {
    const ProjPresentation& pm = presentation(m);
    const ProjPresentation& pn = presentation(n);
    std::vector<ModuleMap> out;
    for (const auto& f : hom(m, n)) {
      ModuleMap f0 = lift_through(hom_basis(pm.p0_rep, pn.p0_rep), pn.cover, compose(f, pm.cover), pm.p0_rep,
                                  pn.p0_rep, "cover");
      ModuleMap f1 = lift_through(hom_basis(pm.p1_rep, pn.p1_rep), pn.differential, compose(f0, pm.differential),
                                  pm.p1_rep, pn.p1_rep, "syzygy");
      out.push_back(std::move(f1));
    }
    return out;
  });
}

std::optional<GradedModuleMap> IntervalCategory::graded_compose(const GradedModuleMap& g,
                                                                const GradedModuleMap& f) const {
  if (f.target != g.source)
    throw PreconditionError("graded_compose: " + to_string(f.target) + " and " + to_string(g.source) +
                            " are not composable");
  const int shift = f.shift + g.shift;
  if (shift >= 2) return std::nullopt;
  GradedModuleMap out;
  out.source = f.source;
  out.target = g.target;
  out.shift = shift;
  if (shift == 0) {
    out.map = compose(g.map, f.map);
    out.coords = hom_coordinates(out.source, out.target, out.map);
    return out;
  }
  ModuleMap lift;
  if (f.shift == 1) {
    lift = compose(g.map, f.map);
  } else {
    const auto& lifts = syzygy_lifts(f.source, f.target);
    ModuleMap f1 = combine(lifts, f.coords, presentation(f.source).p1_rep, presentation(f.target).p1_rep);
    lift = compose(g.map, f1);
  }
  out.coords = ext_coordinates(out.source, out.target, lift);
  out.map = ext_representative(out.source, out.target, out.coords);
  return out;
}

Vector IntervalCategory::dimension_vector(const Interval& x) const {
  Vector d = algebra::zero_vector(n());
  for (int v = x.a; v <= x.b; ++v) d[static_cast<std::size_t>(v - 1)] = 1;
  return d;
}

Interval IntervalCategory::tau_module(const Interval& m, TauDirection direction) const {
  check_interval(orientation_, m);
  if (direction == TauDirection::forward && is_projective(orientation_, m))
    throw BoundaryError("tau of the projective " + to_string(m));
  if (direction == TauDirection::inverse && is_injective(orientation_, m))
    throw BoundaryError("inverse tau of the injective " + to_string(m));
  const Matrix& phi = direction == TauDirection::forward ? coxeter_.phi : coxeter_.phi_inverse;
  Vector d = phi * dimension_vector(m);
  int a = 0, b = 0;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] == 0) continue;
    if (d[v] != 1 || (b != 0 && b != static_cast<int>(v))) throw InternalError("tau_module: image is not an interval");
    if (a == 0) a = static_cast<int>(v) + 1;
    b = static_cast<int>(v) + 1;
  }
  if (a == 0) throw InternalError("tau_module: image is zero");
  return Interval{a, b};
}

Interval tau_module(const Orientation& o, const Interval& m, TauDirection direction) {
  return IntervalCategory(o).tau_module(m, direction);
}

ProjPresentation proj_presentation(const Orientation& o, const Interval& m) {
  return IntervalCategory(o).presentation(m);
}

}  // namespace mcluster::rep
