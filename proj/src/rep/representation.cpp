#include "mcluster/rep/representation.hpp"

#include "mcluster/errors.hpp"

namespace mcluster::rep {

std::size_t Representation::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

void Representation::validate() const {
  if (dims.size() != orientation.n()) throw PreconditionError("representation: wrong number of vertex spaces");
  if (maps.size() != orientation.num_arrows()) throw PreconditionError("representation: wrong number of arrow maps");
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (maps[k].rows() != dim(orientation.arrow_target(k)) || maps[k].cols() != dim(orientation.arrow_source(k)))
      throw PreconditionError("representation: arrow map " + std::to_string(k + 1) + " has the wrong shape");
}

bool ModuleMap::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

Vector ModuleMap::flatten() const {
  Vector out;
  for (const auto& c : comps)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t col = 0; col < c.cols(); ++col) out.push_back(c(r, col));
  return out;
}

Representation interval_rep(const Orientation& o, const Interval& x) {
  check_interval(o, x);
  Representation r;
  r.orientation = o;
  for (int v = 1; v <= static_cast<int>(o.n()); ++v) r.dims.push_back(x.contains(v) ? 1 : 0);
  for (std::size_t k = 0; k < o.num_arrows(); ++k) {
    int s = o.arrow_source(k), t = o.arrow_target(k);
    Matrix m(r.dim(t), r.dim(s));
    if (x.contains(s) && x.contains(t)) m(0, 0) = 1;
    r.maps.push_back(std::move(m));
  }
  return r;
}

Representation zero_rep(const Orientation& o) { return direct_sum(o, {}); }

Representation direct_sum(const Orientation& o, const std::vector<Representation>& parts) {
  Representation r;
  r.orientation = o;
  r.dims.assign(o.n(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < o.n(); ++v) r.dims[v] += p.dims[v];
  for (std::size_t k = 0; k < o.num_arrows(); ++k) {
    int s = o.arrow_source(k), t = o.arrow_target(k);
    Matrix m(r.dim(t), r.dim(s));
    std::size_t row = 0, col = 0;
    for (const auto& p : parts) {
      const Matrix& b = p.maps[k];
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(row + i, col + j) = b(i, j);
      row += b.rows();
      col += b.cols();
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.comps.size() != f.comps.size()) throw PreconditionError("compose: vertex count mismatch");
  ModuleMap out;
  for (std::size_t v = 0; v < f.comps.size(); ++v) out.comps.push_back(g.comps[v] * f.comps[v]);
  return out;
}

ModuleMap zero_map(const Representation& source, const Representation& target) {
  ModuleMap out;
  for (std::size_t v = 0; v < source.dims.size(); ++v) out.comps.emplace_back(target.dims[v], source.dims[v]);
  return out;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap out;
  for (auto d : m.dims) out.comps.push_back(Matrix::identity(d));
  return out;
}

ModuleMap scaled(const ModuleMap& f, const Rational& s) {
  ModuleMap out;
  for (const auto& c : f.comps) out.comps.push_back(c.scaled(s));
  return out;
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap out;
  for (std::size_t v = 0; v < f.comps.size(); ++v) out.comps.push_back(f.comps[v] + g.comps[v]);
  return out;
}

ModuleMap combine(const std::vector<ModuleMap>& maps, const Vector& coefs, const Representation& source,
                  const Representation& target) {
  ModuleMap out = zero_map(source, target);
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (coefs[k] != 0) out = add(out, scaled(maps[k], coefs[k]));
  return out;
}

ModuleMap unflatten(const Vector& v, const Representation& source, const Representation& target) {
  ModuleMap out = zero_map(source, target);
  std::size_t idx = 0;
  for (auto& c : out.comps)
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t col = 0; col < c.cols(); ++col) c(r, col) = v.at(idx++);
  return out;
}

bool is_morphism(const ModuleMap& f, const Representation& source, const Representation& target) {
  const Orientation& o = source.orientation;
  for (std::size_t k = 0; k < o.num_arrows(); ++k) {
    std::size_t s = static_cast<std::size_t>(o.arrow_source(k) - 1), t = static_cast<std::size_t>(o.arrow_target(k) - 1);
    if (!(target.maps[k] * f.comps[s] == f.comps[t] * source.maps[k])) return false;
  }
  return true;
}

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n) {
  const Orientation& o = m.orientation;
  const std::size_t nv = o.n();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * m.dims[v] + c; };

  std::size_t rows = 0;
  for (std::size_t k = 0; k < o.num_arrows(); ++k)
    rows += n.dims[static_cast<std::size_t>(o.arrow_target(k) - 1)] * m.dims[static_cast<std::size_t>(o.arrow_source(k) - 1)];
  Matrix system(rows, offset[nv]);
  std::size_t row = 0;
  for (std::size_t k = 0; k < o.num_arrows(); ++k) {
    std::size_t s = static_cast<std::size_t>(o.arrow_source(k) - 1), t = static_cast<std::size_t>(o.arrow_target(k) - 1);
    const Matrix& nk = n.maps[k];
    const Matrix& mk = m.maps[k];
    // (N_k f_s - f_t M_k)(r, c) = 0
    for (std::size_t r = 0; r < n.dims[t]; ++r)
      for (std::size_t c = 0; c < m.dims[s]; ++c, ++row) {
        for (std::size_t p = 0; p < n.dims[s]; ++p)
          if (nk(r, p) != 0) system(row, var(s, p, c)) += nk(r, p);
        for (std::size_t q = 0; q < m.dims[t]; ++q)
          if (mk(q, c) != 0) system(row, var(t, r, q)) -= mk(q, c);
      }
  }
  std::vector<ModuleMap> basis;
  for (const Vector& v : algebra::kernel_basis(system)) basis.push_back(unflatten(v, m, n));
  return basis;
}

std::vector<ModuleMap> hom_basis(const Orientation& o, const Interval& m, const Interval& n) {
  return hom_basis(interval_rep(o, m), interval_rep(o, n));
}

Kernel kernel_of(const ModuleMap& f, const Representation& source) {
  const Orientation& o = source.orientation;
  Kernel out;
  out.rep.orientation = o;
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < o.n(); ++v) {
    auto kb = algebra::kernel_basis(f.comps[v]);
    bases.push_back(Matrix::from_columns(source.dims[v], kb));
    out.rep.dims.push_back(kb.size());
  }
  for (std::size_t k = 0; k < o.num_arrows(); ++k) {
    std::size_t s = static_cast<std::size_t>(o.arrow_source(k) - 1), t = static_cast<std::size_t>(o.arrow_target(k) - 1);
    Matrix image = source.maps[k] * bases[s];
    Matrix induced(out.rep.dims[t], out.rep.dims[s]);
    for (std::size_t c = 0; c < image.cols(); ++c) {
      auto x = algebra::solve(bases[t], image.column(c));
      if (!x) throw InternalError("kernel_of: kernel is not a subrepresentation");
      for (std::size_t r = 0; r < x->size(); ++r) induced(r, c) = (*x)[r];
    }
    out.rep.maps.push_back(std::move(induced));
  }
  out.inclusion.comps = std::move(bases);
  return out;
}

Matrix path_map(const Representation& m, int i, int j) {
  const Orientation& o = m.orientation;
  if (!o.reaches(i, j)) throw PreconditionError("path_map: no path");
  Matrix acc = Matrix::identity(m.dim(i));
  int v = i;
  while (v != j) {
    std::size_t k = static_cast<std::size_t>(v < j ? v - 1 : v - 2);
    acc = m.maps[k] * acc;
    v += v < j ? 1 : -1;
  }
  return acc;
}

Cover projective_cover(const Representation& m) {
  const Orientation& o = m.orientation;
  Cover cover;
  std::vector<Vector> generators;
  for (int v = 1; v <= static_cast<int>(o.n()); ++v) {
    algebra::Span radical(m.dim(v));
    for (std::size_t k = 0; k < o.num_arrows(); ++k)
      if (o.arrow_target(k) == v)
        for (std::size_t c = 0; c < m.maps[k].cols(); ++c) radical.add(m.maps[k].column(c));
    for (std::size_t e = 0; e < m.dim(v); ++e) {
      Vector x = algebra::unit_vector(m.dim(v), e);
      if (radical.add(x)) {
        cover.tops.push_back(v);
        generators.push_back(std::move(x));
      }
    }
  }
  std::vector<Representation> parts;
  for (int u : cover.tops) parts.push_back(interval_rep(o, indecomposable_projective(o, u)));
  cover.projective = direct_sum(o, parts);
  for (int w = 1; w <= static_cast<int>(o.n()); ++w) {
    std::vector<Vector> cols;
    for (std::size_t g = 0; g < cover.tops.size(); ++g)
      if (o.reaches(cover.tops[g], w)) cols.push_back(path_map(m, cover.tops[g], w) * generators[g]);
    cover.map.comps.push_back(Matrix::from_columns(m.dim(w), cols));
  }
  return cover;
}

std::vector<Interval> decompose(const Representation& x) {
  x.validate();
  const Orientation& o = x.orientation;
  auto intervals = all_intervals(o.n());
  const std::size_t count = intervals.size();
  // dim Hom(Z, X) = sum over Z' of mult(Z') dim Hom(Z, Z'); the Hom-dimension
  // matrix between indecomposables is invertible for a directed algebra
  Matrix h(count, count);
  Vector rhs(count);
  for (std::size_t i = 0; i < count; ++i) {
    Representation z = interval_rep(o, intervals[i]);
    rhs[i] = static_cast<long>(hom_basis(z, x).size());
    for (std::size_t j = 0; j < count; ++j)
      h(i, j) = static_cast<long>(hom_basis(z, interval_rep(o, intervals[j])).size());
  }
  auto mult = algebra::solve(h, rhs);
  if (!mult) throw InternalError("decompose: Hom-dimension system is inconsistent");
  std::vector<Interval> out;
  for (std::size_t j = 0; j < count; ++j) {
    const Rational& c = (*mult)[j];
    if (c < 0 || c.get_den() != 1) throw InternalError("decompose: non-integral multiplicity");
    for (long k = 0; k < c.get_num().get_si(); ++k) out.push_back(intervals[j]);
  }
  return out;
}

}  // namespace mcluster::rep
