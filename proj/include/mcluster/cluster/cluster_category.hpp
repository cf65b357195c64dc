#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcluster/algebra/structure_algebra.hpp"
#include "mcluster/derived/derived_category.hpp"

namespace mcluster::cluster {

using derived::DerivedObject;
using derived::DerivedSum;
using derived::GradedMorphism;

/// object = F_m^power(original), lying in the fundamental domain.
struct OrbitRepresentative {
  DerivedObject object;
  int power = 0;
};

OrbitRepresentative canonical_rep(const derived::DerivedCategory& cat, const DerivedObject& x, int m);
OrbitRepresentative canonical_rep(const rep::Orientation& o, const DerivedObject& x, int m);

/// components[i] is a basis of Hom(X, F_m^i Y); only nonzero components are stored.
struct GradedHomSpace {
  DerivedObject source;
  DerivedObject target;
  int m = 1;
  std::map<int, std::vector<GradedMorphism>> components;

  std::size_t dim() const;
};

GradedHomSpace cluster_hom(const derived::DerivedCategory& cat, const DerivedObject& x, const DerivedObject& y, int m);

struct ClusterViolation {
  int ext_degree = 0;  // j in 1..m
  std::size_t source = 0;
  std::size_t target = 0;
  int grade = 0;  // i with Hom(T_source, F^i T_target[j]) != 0
};

struct ClusterTiltingCertificate {
  bool cluster_tilting = false;
  std::vector<std::string> issues;
  std::vector<ClusterViolation> violations;
};

/// Summands are reduced to their canonical representatives first.
ClusterTiltingCertificate is_m_cluster_tilting(const DerivedSum& t, int m);

struct GradedBasisElement {
  std::size_t source = 0;  // summand index
  std::size_t target = 0;
  int grade = 0;           // element of Hom(T_source, F^grade T_target)
  std::size_t index = 0;   // position within that component's basis
};

/// StructureAlgebra with grades, plus where each basis element comes from.
struct GradedEndoAlgebra {
  algebra::StructureAlgebra algebra;
  std::vector<GradedBasisElement> basis;

  int max_grade() const;
};

/// End_{C_m} of the orbit sum of T, graded relative to T. Homs between
/// indecomposables of D^b(kA_n) are at most one-dimensional, and each basis
/// element is a fixed nonzero vector; a product of basis elements is the basis
/// element of the target component when the transported composite
/// F^j(g) f is nonzero, and zero otherwise. max_grade truncates the basis
/// and every product of higher grade. Requires Hom(T, F^i T) = 0 for i < 0.
GradedEndoAlgebra orbit_endo_algebra(const DerivedSum& t, int m, std::optional<int> max_grade = std::nullopt);

/// orbit_endo_algebra of a tilting complex.
GradedEndoAlgebra cluster_endo(const DerivedSum& t, int m);

/// End(T) + Hom(T, F_m T) with all products of two grade-1 elements zero.
/// Requires T tilting with gldim End(T) <= m+1 (checked up to `bound`).
GradedEndoAlgebra relation_extension(const DerivedSum& t, int m, std::optional<std::size_t> bound = std::nullopt);

/// True iff every product of two positive-grade basis elements of
/// cluster_endo(T) vanishes.
bool positive_square_zero(const DerivedSum& t, int m);
bool positive_square_zero(const GradedEndoAlgebra& c);

/// Quotient by the span of basis elements of grade > max_grade (an ideal,
/// since grades are nonnegative and additive).
GradedEndoAlgebra truncate_grades(const GradedEndoAlgebra& c, int max_grade);

struct TruncationReport {
  bool same_quiver = false;         // quiver_of(C) and quiver_of(R) agree
  bool truncation_matches = false;  // R equals C modulo grades >= 2, constant for constant
  bool kernel_in_rad2 = false;      // grade >= 2 part of C lies in rad^2 C
  bool holds() const { return same_quiver && truncation_matches && kernel_in_rad2; }
};

TruncationReport truncation_check(const DerivedSum& t, int m, std::optional<std::size_t> bound = std::nullopt);

}  // namespace mcluster::cluster
