#pragma once

#include <optional>
#include <vector>

#include "hibi/cotangent.hpp"

namespace hibi {

struct SingularLocusReport {
  int variety_dim = 0;  // #J
  bool is_smooth_variety = false;
  std::vector<Face> faces;                 // every face, enumeration order
  std::vector<CotangentReport> reports;    // aligned with faces
  std::vector<std::size_t> singular_faces; // indices into faces (S_L)
  std::vector<std::size_t> components;     // inclusion-maximal singular D's
};

// Enumerates all faces, computes each cotangent report and reduces the
// singular set to inclusion-maximal sublattices. LimitExceeded past `cap`.
SingularLocusReport singular_locus(const Lattice& l,
                                   std::optional<std::size_t> cap = std::nullopt);

struct PointClassification {
  Face face;
  CotangentReport report;
  bool smooth_at_point = false;
};

// Support -> face -> smoothness (constant along the orbit).
PointClassification classify_point(const Lattice& l, const VarietyPoint& p);

}  // namespace hibi
