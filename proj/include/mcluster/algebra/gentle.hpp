#pragma once

#include <vector>

#include "mcluster/algebra/quiver.hpp"

namespace mcluster::algebra {

struct GentleReport {
  bool degree_bounded = false;        // at most two arrows in and out at each vertex
  bool monomial_quadratic = false;    // every relation is a single path of length 2
  bool compatible = false;            // the two "at most one" conditions on both sides of every arrow
  bool gentle = false;
  std::vector<PathWord> cycles;       // simple oriented cycles, each starting at its smallest vertex
  bool cycles_of_expected_length = false;
  bool cycles_fully_related = false;  // every consecutive pair (with wraparound) is a relation
  bool cycle_compliant = false;
};

/// Gentleness plus the requirement that every oriented cycle has length
/// m + 2 and all compositions of consecutive arrows along it are relations.
GentleReport is_gentle_with_cycles(const Presentation& p, std::size_t m);

/// Simple oriented cycles as arrow-id words.
std::vector<PathWord> simple_cycles(const Quiver& q);

}  // namespace mcluster::algebra
