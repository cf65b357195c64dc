#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcluster/rep/interval_category.hpp"

namespace mcluster::derived {

using rep::Interval;
using rep::Orientation;

/// The stalk complex module[degree].
struct DerivedObject {
  int degree = 0;
  Interval module;

  friend bool operator==(const DerivedObject&, const DerivedObject&) = default;
  friend auto operator<=>(const DerivedObject&, const DerivedObject&) = default;
};

std::string to_string(const DerivedObject& x);

/// Formal direct sum of indecomposables; summand order is significant (it
/// fixes the vertex numbering of endomorphism algebras).
struct DerivedSum {
  Orientation orientation;
  std::vector<DerivedObject> summands;

  std::size_t n() const { return orientation.n(); }
  friend bool operator==(const DerivedSum&, const DerivedSum&) = default;
};

/// Summands sorted by (degree, a, b).
DerivedSum sorted(const DerivedSum& t);

struct GradedMorphism {
  DerivedObject source;
  DerivedObject target;
  rep::GradedModuleMap payload;  // payload.shift == target.degree - source.degree

  int shift() const { return payload.shift; }
  bool is_zero() const { return payload.is_zero(); }
};

/// X = tau^{-z} of the degree-0 projective P_vertex.
struct OrbitCoordinates {
  int z = 0;
  int vertex = 1;

  friend bool operator==(const OrbitCoordinates&, const OrbitCoordinates&) = default;
  friend auto operator<=>(const OrbitCoordinates&, const OrbitCoordinates&) = default;
};

/// D^b(kQ) for Q of type A_n at the level of indecomposable objects.
class DerivedCategory {
 public:
  explicit DerivedCategory(Orientation o);

  const Orientation& orientation() const { return modules_.orientation(); }
  std::size_t n() const { return modules_.n(); }
  const rep::IntervalCategory& modules() const { return modules_; }

  std::vector<GradedMorphism> hom_basis(const DerivedObject& x, const DerivedObject& y) const;
  std::size_t hom_dim(const DerivedObject& x, const DerivedObject& y) const;
  /// g after f; nullopt when the composite is forced to vanish (total shift >= 2).
  std::optional<GradedMorphism> compose(const GradedMorphism& g, const GradedMorphism& f) const;

  DerivedObject shift(const DerivedObject& x, int k) const { return {x.degree + k, x.module}; }
  DerivedObject tau(const DerivedObject& x) const;
  DerivedObject tau_inverse(const DerivedObject& x) const;
  DerivedObject tau_power(const DerivedObject& x, int k) const;  // tau^k, k may be negative
  /// F_m = tau^{-1}[m] applied `power` times (inverse for negative power).
  DerivedObject apply_F(const DerivedObject& x, int m, int power) const;

  OrbitCoordinates coordinates(const DerivedObject& x) const;
  DerivedObject from_coordinates(const OrbitCoordinates& c) const;

  bool in_fundamental_domain(const DerivedObject& x, int m) const;
  bool is_projective(const DerivedObject& x) const { return rep::is_projective(orientation(), x.module); }

 private:
  rep::IntervalCategory modules_;
  mutable std::mutex mutex_;
  mutable std::map<DerivedObject, OrbitCoordinates> coordinates_;
};

/// Shared instance per orientation.
const DerivedCategory& category_for(const Orientation& o);

}  // namespace mcluster::derived
