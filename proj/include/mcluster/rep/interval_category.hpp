#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "mcluster/errors.hpp"
#include "mcluster/rep/representation.hpp"

namespace mcluster::rep {

/// Raised by tau_module at the projective (resp. injective) boundary so that
/// callers can apply the derived-level wraparound.
class BoundaryError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// 0 -> P1 -> P0 -> M -> 0 with P0 a projective cover.
struct ProjPresentation {
  Interval module;
  std::vector<int> p0;  // P0 = direct sum of P_v for v in p0
  std::vector<int> p1;
  Representation p0_rep;
  Representation p1_rep;
  ModuleMap differential;  // P1 -> P0
  ModuleMap cover;         // P0 -> M
};

struct Ext1Class {
  Interval source;  // M
  Interval target;  // N
  ModuleMap lift;   // P1(M) -> N
  Vector coords;    // canonical coordinates in Ext^1(M, N)
};

/// Morphism of degree shift 0 (a module map) or 1 (an Ext^1 class given by
/// a lift P1(source) -> target).
struct GradedModuleMap {
  Interval source;
  Interval target;
  int shift = 0;
  ModuleMap map;
  Vector coords;  // coordinates in the canonical basis of Hom or Ext^1

  bool is_zero() const { return algebra::is_zero(coords); }
};

struct CoxeterData {
  Matrix cartan;  // columns are dimension vectors of P_1, ..., P_n
  Matrix phi;     // -C^T C^{-1}
  Matrix phi_inverse;
};

enum class TauDirection { forward, inverse };

/// Hom, Ext^1 and composition between interval modules of a fixed
/// orientation. Results are memoized; the cache is guarded by a mutex so a
/// single instance can be shared between threads.
class IntervalCategory {
 public:
  explicit IntervalCategory(Orientation o);

  const Orientation& orientation() const { return orientation_; }
  std::size_t n() const { return orientation_.n(); }

  const Representation& rep(const Interval& x) const;
  const ProjPresentation& presentation(const Interval& m) const;

  const std::vector<ModuleMap>& hom(const Interval& m, const Interval& n) const;
  std::size_t hom_dim(const Interval& m, const Interval& n) const { return hom(m, n).size(); }
  std::vector<Ext1Class> ext1_basis(const Interval& m, const Interval& n) const;
  std::size_t ext_dim(const Interval& m, const Interval& n) const;

  Vector hom_coordinates(const Interval& m, const Interval& n, const ModuleMap& f) const;
  /// Coordinates of the class of a lift P1(m) -> n.
  Vector ext_coordinates(const Interval& m, const Interval& n, const ModuleMap& lift) const;
  /// Canonical lift with the given coordinates.
  ModuleMap ext_representative(const Interval& m, const Interval& n, const Vector& coords) const;

  /// Basis elements of Hom (shift 0) or Ext^1 (shift 1) as graded maps.
  std::vector<GradedModuleMap> graded_basis(const Interval& m, const Interval& n, int shift) const;

  /// g after f. Returns nullopt when the total shift is at least 2 (the
  /// composite lives in Ext^2 = 0). Throws PreconditionError if f.target != g.source.
  std::optional<GradedModuleMap> graded_compose(const GradedModuleMap& g, const GradedModuleMap& f) const;

  const CoxeterData& coxeter() const { return coxeter_; }
  Vector dimension_vector(const Interval& x) const;
  /// Throws BoundaryError for projective input (forward) or injective input (inverse).
  Interval tau_module(const Interval& m, TauDirection direction) const;

 private:
  struct ExtData {
    std::vector<ModuleMap> reps;  // canonical lifts, one per basis class
    Matrix system;                // columns: reps then image of Hom(P0, N), flattened
  };
  const ExtData& ext_data(const Interval& m, const Interval& n) const;
  /// Lifts of each Hom(m, n) basis map to P1(m) -> P1(n).
  const std::vector<ModuleMap>& syzygy_lifts(const Interval& m, const Interval& n) const;

  Orientation orientation_;
  CoxeterData coxeter_;
  mutable std::mutex mutex_;
  mutable std::map<Interval, std::unique_ptr<Representation>> reps_;
  mutable std::map<Interval, std::unique_ptr<ProjPresentation>> presentations_;
  mutable std::map<std::pair<Interval, Interval>, std::unique_ptr<std::vector<ModuleMap>>> homs_;
  mutable std::map<std::pair<Interval, Interval>, std::unique_ptr<ExtData>> exts_;
  mutable std::map<std::pair<Interval, Interval>, std::unique_ptr<std::vector<ModuleMap>>> lifts_;
};

/// Standalone forms of the interval-level operations.
Interval tau_module(const Orientation& o, const Interval& m, TauDirection direction);
ProjPresentation proj_presentation(const Orientation& o, const Interval& m);

}  // namespace mcluster::rep
