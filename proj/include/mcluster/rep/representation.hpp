#pragma once

#include <vector>

#include "mcluster/algebra/matrix.hpp"
#include "mcluster/rep/orientation.hpp"

namespace mcluster::rep {

using algebra::Matrix;
using algebra::Rational;
using algebra::Vector;

/// Vector space per vertex and a matrix per arrow; maps[k] goes from the
/// space at arrow_source(k) to the space at arrow_target(k).
struct Representation {
  Orientation orientation;
  std::vector<std::size_t> dims;  // dims[v-1]
  std::vector<Matrix> maps;

  std::size_t dim(int v) const { return dims[static_cast<std::size_t>(v - 1)]; }
  std::size_t total_dim() const;
  /// Throws PreconditionError on inconsistent shapes.
  void validate() const;
};

/// One matrix per vertex: comps[v-1] maps source space v to target space v.
struct ModuleMap {
  std::vector<Matrix> comps;

  bool is_zero() const;
  Vector flatten() const;
  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

Representation interval_rep(const Orientation& o, const Interval& x);
Representation direct_sum(const Orientation& o, const std::vector<Representation>& parts);
Representation zero_rep(const Orientation& o);

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap zero_map(const Representation& source, const Representation& target);
ModuleMap identity_map(const Representation& m);
ModuleMap scaled(const ModuleMap& f, const Rational& s);
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap combine(const std::vector<ModuleMap>& maps, const Vector& coefs, const Representation& source,
                  const Representation& target);
ModuleMap unflatten(const Vector& v, const Representation& source, const Representation& target);

/// True iff the commuting-square condition holds at every arrow.
bool is_morphism(const ModuleMap& f, const Representation& source, const Representation& target);

/// Basis of Hom(M, N): the kernel of the assembled commuting-square system.
std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n);
std::vector<ModuleMap> hom_basis(const Orientation& o, const Interval& m, const Interval& n);

struct Kernel {
  Representation rep;
  ModuleMap inclusion;  // rep -> source of the map
};
Kernel kernel_of(const ModuleMap& f, const Representation& source);

struct Cover {
  std::vector<int> tops;  // P_{tops[k]} is the k-th summand
  Representation projective;
  ModuleMap map;  // projective -> module, surjective with minimal domain
};
Cover projective_cover(const Representation& m);

/// Composite of arrow maps along the path from i to j (requires reaches(i, j)).
Matrix path_map(const Representation& m, int i, int j);

/// Multiset of intervals with direct sum isomorphic to x, sorted by (a, b).
std::vector<Interval> decompose(const Representation& x);

}  // namespace mcluster::rep
