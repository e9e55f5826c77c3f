#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "hibi/singular.hpp"

namespace hibi {

// Input document: either an explicit poset (elements + covers, with mode
// "lattice" or "irreducibles") or a family descriptor.
struct LatticeSpec {
  std::optional<std::string> family;
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::string mode = "lattice";  // or "irreducibles"

  static LatticeSpec from_json(const nlohmann::json& j);
  static LatticeSpec from_family(const std::string& descriptor);

  Lattice build(std::optional<std::size_t> cap = std::nullopt) const;
  std::string display_name() const;
};

struct AnalyzeOptions {
  bool faces = false;
  bool singular = false;
  bool oracle = false;
  std::optional<std::size_t> max_faces;
  std::optional<std::vector<std::string>> face;  // explicit element list
};

// Builds the full structured report (stable key and list order).
nlohmann::ordered_json analyze(const LatticeSpec& spec, const AnalyzeOptions& opts);

// Plain-text rendering of an analysis report.
std::string render_text(const nlohmann::ordered_json& report);

// Hasse diagram in DOT; highlight annotates nodes by singular-locus
// component membership.
std::string export_dot(const LatticeSpec& spec, bool highlight_singular,
                       std::optional<std::size_t> max_faces = std::nullopt);

}  // namespace hibi
