#include "mcluster/algebra/modules.hpp"

#include "mcluster/errors.hpp"

namespace mcluster::algebra {

std::vector<Vector> right_ideal_basis(const StructureAlgebra& a, std::size_t j) {
  Span span(a.dim());
  std::vector<Vector> basis;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    Vector v = a.multiply(a.idempotent(j), a.basis_vector(b));
    if (span.add(v)) basis.push_back(std::move(v));
  }
  return basis;
}

RightModule free_module(const StructureAlgebra& a, const std::vector<std::size_t>& summands) {
  const std::size_t d = a.dim();
  RightModule m;
  m.ambient_dim = summands.size() * d;
  m.act = [&a, d](const Vector& v, const Vector& x) {
    Vector out(v.size());
    for (std::size_t off = 0; off < v.size(); off += d) {
      Vector part(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + d));
      Vector prod = is_zero(part) ? zero_vector(d) : a.multiply(part, x);
      std::copy(prod.begin(), prod.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
    }
    return out;
  };
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (const Vector& y : right_ideal_basis(a, summands[k])) {
      Vector v = zero_vector(m.ambient_dim);
      std::copy(y.begin(), y.end(), v.begin() + static_cast<std::ptrdiff_t>(k * d));
      m.basis.push_back(std::move(v));
    }
  return m;
}

ProjectiveCover projective_cover(const StructureAlgebra& a, const RightModule& m) {
  const std::size_t d = a.dim();
  std::vector<Vector> rad = radical_basis(a);
  Span covered(m.ambient_dim);
  for (const Vector& v : m.basis)
    for (const Vector& r : rad) covered.add(m.act(v, r));

  ProjectiveCover cover;
  for (std::size_t j = 0; j < a.num_idempotents(); ++j)
    for (const Vector& v : m.basis) {
      Vector g = m.act(v, a.idempotent(j));
      if (covered.add(g)) {
        cover.summands.push_back(j);
        cover.generators.push_back(std::move(g));
      }
    }
  if (covered.dimension() != m.dim()) throw InternalError("projective_cover: generators do not span the module");

  std::vector<std::vector<Vector>> ideal_bases;
  std::vector<Vector> columns;
  for (std::size_t l = 0; l < cover.summands.size(); ++l) {
    ideal_bases.push_back(right_ideal_basis(a, cover.summands[l]));
    for (const Vector& y : ideal_bases.back()) columns.push_back(m.act(cover.generators[l], y));
  }
  cover.kernel = free_module(a, cover.summands);
  cover.kernel.basis.clear();
  for (const Vector& kappa : kernel_basis(Matrix::from_columns(m.ambient_dim, columns))) {
    Vector element = zero_vector(cover.summands.size() * d);
    std::size_t c = 0;
    for (std::size_t l = 0; l < cover.summands.size(); ++l)
      for (const Vector& y : ideal_bases[l]) {
        if (kappa[c] != 0)
          for (std::size_t i = 0; i < d; ++i) element[l * d + i] += kappa[c] * y[i];
        ++c;
      }
    cover.kernel.basis.push_back(std::move(element));
  }
  return cover;
}

std::optional<std::size_t> projective_dimension(const StructureAlgebra& a, const RightModule& m, std::size_t bound) {
  RightModule current = m;
  for (std::size_t depth = 0; depth <= bound; ++depth) {
    if (current.dim() == 0) return depth == 0 ? 0 : depth - 1;
    current = projective_cover(a, current).kernel;
  }
  if (current.dim() == 0) return bound;
  return std::nullopt;
}

std::optional<std::size_t> simple_projective_dimension(const StructureAlgebra& a, std::size_t j, std::size_t bound) {
  // the syzygy of S_j is e_j rad inside e_j A
  RightModule p = free_module(a, {j});
  RightModule rad_part = p;
  rad_part.basis.clear();
  Span span(p.ambient_dim);
  for (const Vector& r : radical_basis(a)) {
    Vector v = a.multiply(a.idempotent(j), r);
    if (span.add(v)) rad_part.basis.push_back(std::move(v));
  }
  if (rad_part.dim() == 0) return 0;
  if (bound == 0) return std::nullopt;
  auto pd = projective_dimension(a, rad_part, bound - 1);
  if (!pd) return std::nullopt;
  return *pd + 1;
}

std::optional<std::size_t> global_dimension(const StructureAlgebra& a, std::size_t bound) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < a.num_idempotents(); ++j) {
    auto pd = simple_projective_dimension(a, j, bound);
    if (!pd) return std::nullopt;
    best = std::max(best, *pd);
  }
  return best;
}

}  // namespace mcluster::algebra
