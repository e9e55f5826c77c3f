#include "hibi/reports.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "hibi/error.hpp"
#include "hibi/linalg.hpp"

namespace hibi {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kToolName = "hibi";
constexpr const char* kToolVersion = "1.0.0";

std::vector<std::string> names_of(const Lattice& l, const Bits& s) {
  std::vector<std::string> out;
  for (int m : s.members()) out.push_back(l.poset().name(m));
  return out;
}

std::vector<std::string> names_of(const Lattice& l, const std::vector<Index>& v) {
  std::vector<std::string> out;
  for (Index m : v) out.push_back(l.poset().name(m));
  return out;
}

ordered_json face_json(const Lattice& l, const Face& f) {
  ordered_json j;
  j["members"] = names_of(l, f.D);
  j["orbit_dim"] = f.orbit_dim;
  j["cone_dim"] = f.cone_dim;
  return j;
}

ordered_json cotangent_json(const Lattice& l, const CotangentReport& r) {
  ordered_json j;
  j["members"] = names_of(l, r.D);
  j["gamma"] = names_of(l, r.gamma);
  j["lambda_set"] = names_of(l, r.lambda);
  j["e_set"] = names_of(l, r.e_set);
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classes) classes.push_back(names_of(l, c));
  j["classes"] = classes;
  j["g_representatives"] = names_of(l, r.g_reps);
  ordered_json basis = ordered_json::array();
  for (const auto& b : r.basis_labels) {
    ordered_json item;
    item["kind"] = (b.kind == BasisLabel::chain) ? "chain" : "class";
    item["element"] = l.poset().name(b.element);
    basis.push_back(item);
  }
  j["basis"] = basis;
  j["tangent_dim"] = r.tangent_dim;
  j["smooth"] = r.smooth;
  return j;
}

}  // namespace

LatticeSpec LatticeSpec::from_json(const json& j) try {
  LatticeSpec s;
  const bool has_family = j.contains("family");
  const bool has_poset = j.contains("elements") || j.contains("covers");
  if (has_family == has_poset)
    throw error(errc::bad_descriptor,
                "spec must contain exactly one of 'family' or 'elements'+'covers'");
  if (has_family) {
    s.family = j.at("family").get<std::string>();
    s.name = *s.family;
    return s;
  }
  s.name = j.value("name", "lattice");
  s.elements = j.at("elements").get<std::vector<std::string>>();
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw error(errc::bad_descriptor, "covers must be [lower, upper] pairs");
    s.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  s.mode = j.value("mode", "lattice");
  if (s.mode != "lattice" && s.mode != "irreducibles")
    throw error(errc::bad_descriptor, "mode must be 'lattice' or 'irreducibles'");
  return s;
} catch (const json::exception& e) {
  throw error(errc::bad_descriptor, e.what());
}

LatticeSpec LatticeSpec::from_family(const std::string& descriptor) {
  LatticeSpec s;
  s.family = descriptor;
  s.name = descriptor;
  return s;
}

Lattice LatticeSpec::build(std::optional<std::size_t> cap) const {
  if (family) return Lattice::family(*family);
  Poset p = Poset::from_covers(elements, covers);
  if (mode == "irreducibles") return Lattice::from_irreducibles(p, cap);
  return Lattice::from_poset(std::move(p));
}

std::string LatticeSpec::display_name() const { return name; }

ordered_json analyze(const LatticeSpec& spec, const AnalyzeOptions& opts) {
  Lattice l = spec.build(opts.max_faces);

  ordered_json rep;
  rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};

  ordered_json lat;
  lat["name"] = spec.display_name();
  lat["size"] = l.size();
  lat["num_irreducibles"] = l.dim();
  lat["dim"] = l.dim();
  lat["is_chain"] = l.diamonds().empty();
  lat["elements"] = l.poset().names();
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : l.poset().covers())
    covers.push_back({l.poset().name(lo), l.poset().name(hi)});
  lat["covers"] = covers;
  lat["irreducibles"] = names_of(l, l.irreducibles());
  lat["nonzero_irreducibles"] = names_of(l, l.nonzero_irreducibles());
  rep["lattice"] = lat;

  ordered_json cone;
  cone["j_order"] = names_of(l, l.irreducibles());
  ordered_json rays = ordered_json::array();
  for (const auto& r : cone_generators(l)) rays.push_back(r);
  cone["rays"] = rays;
  ordered_json gens = ordered_json::array();
  auto sg = semigroup_generators(l);
  for (Index a = 0; a < l.size(); ++a) {
    ordered_json g;
    g["element"] = l.poset().name(a);
    g["vector"] = sg[a];
    gens.push_back(g);
  }
  cone["semigroup_generators"] = gens;
  rep["cone"] = cone;

  if (opts.face) {
    Bits d(l.size());
    for (const auto& name : *opts.face) d.set(l.poset().index_of(name));
    // NotEmbedded (with witness) propagates as invalid input.
    CotangentReport cr = cotangent_report(l, d);
    rep["face_report"] = cotangent_json(l, cr);
    std::pair<Index, Index> w;
    bool lam_embedded = is_embedded_sublattice(l, cr.lambda, &w);
    rep["face_report"]["lambda_is_embedded"] = lam_embedded;
    if (!lam_embedded)
      rep["face_report"]["lambda_witness"] = {l.poset().name(w.first),
                                              l.poset().name(w.second)};
  }

  const bool need_faces = opts.faces || opts.singular || opts.oracle;
  if (need_faces) {
    SingularLocusReport sl = singular_locus(l, opts.max_faces);

    if (opts.faces) {
      ordered_json faces = ordered_json::array();
      for (std::size_t i = 0; i < sl.faces.size(); ++i) {
        ordered_json f = face_json(l, sl.faces[i]);
        f["cotangent"] = cotangent_json(l, sl.reports[i]);
        faces.push_back(f);
      }
      rep["faces"] = faces;
    }

    if (opts.singular) {
      ordered_json s;
      s["variety_dim"] = sl.variety_dim;
      s["is_smooth_variety"] = sl.is_smooth_variety;
      ordered_json singular = ordered_json::array();
      for (std::size_t i : sl.singular_faces)
        singular.push_back(names_of(l, sl.faces[i].D));
      s["singular_faces"] = singular;
      ordered_json comps = ordered_json::array();
      for (std::size_t i : sl.components) comps.push_back(names_of(l, sl.faces[i].D));
      s["components"] = comps;
      rep["singular_locus"] = s;
    }

    if (opts.oracle) {
      ordered_json o;
      o["semigroup_rank"] = semigroup_rank_oracle(l);
      // Exact cross-check per face, fanned out over workers; assembly is
      // sequential so the report stays byte-stable.
      std::vector<int> oracle_dim(sl.faces.size());
      std::atomic<std::size_t> next{0};
      unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                            sl.faces.size() > 16 ? 8u : 1u);
      auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < sl.faces.size();
             i = next.fetch_add(1))
          oracle_dim[i] = tangent_dim_oracle(l, sl.faces[i].D);
      };
      if (workers <= 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
      }
      ordered_json checks = ordered_json::array();
      bool all_agree = true;
      for (std::size_t i = 0; i < sl.faces.size(); ++i) {
        ordered_json c;
        c["members"] = names_of(l, sl.faces[i].D);
        c["combinatorial"] = sl.reports[i].tangent_dim;
        c["oracle"] = oracle_dim[i];
        bool agree = (sl.reports[i].tangent_dim == oracle_dim[i]);
        c["agree"] = agree;
        all_agree = all_agree && agree;
        checks.push_back(c);
      }
      o["faces"] = checks;
      o["all_agree"] = all_agree;
      rep["oracle"] = o;
      if (!all_agree)
        throw error(errc::internal,
                    "combinatorial tangent dimension disagrees with the Jacobian oracle");
    }
  }
  return rep;
}

std::string render_text(const ordered_json& rep) {
  std::ostringstream os;
  const auto& lat = rep.at("lattice");
  os << "lattice " << lat.at("name").get<std::string>() << ": "
     << lat.at("size").get<int>() << " elements, dim " << lat.at("dim").get<int>()
     << (lat.at("is_chain").get<bool>() ? ", chain" : "") << "\n";
  os << "irreducibles:";
  for (const auto& s : lat.at("irreducibles")) os << " " << s.get<std::string>();
  os << "\n";
  const auto& cone = rep.at("cone");
  os << "cone rays (" << cone.at("rays").size() << "):\n";
  for (const auto& r : cone.at("rays")) {
    os << " ";
    for (const auto& v : r) os << " " << v.get<long>();
    os << "\n";
  }
  if (rep.contains("face_report")) {
    const auto& f = rep.at("face_report");
    os << "face D = {";
    bool first = true;
    for (const auto& m : f.at("members")) {
      if (!first) os << ",";
      os << m.get<std::string>();
      first = false;
    }
    os << "}: tangent_dim " << f.at("tangent_dim").get<int>()
       << (f.at("smooth").get<bool>() ? " (smooth)" : " (singular)") << "\n";
  }
  if (rep.contains("faces"))
    os << "faces: " << rep.at("faces").size() << "\n";
  if (rep.contains("singular_locus")) {
    const auto& s = rep.at("singular_locus");
    os << "variety dim " << s.at("variety_dim").get<int>() << ", "
       << (s.at("is_smooth_variety").get<bool>() ? "smooth" : "singular") << "\n";
    os << "singular components: " << s.at("components").size() << "\n";
    for (const auto& c : s.at("components")) {
      os << "  {";
      bool first = true;
      for (const auto& m : c) {
        if (!first) os << ",";
        os << m.get<std::string>();
        first = false;
      }
      os << "}\n";
    }
  }
  if (rep.contains("oracle"))
    os << "oracle cross-check: "
       << (rep.at("oracle").at("all_agree").get<bool>() ? "all agree" : "DISAGREEMENT")
       << "\n";
  return os.str();
}

std::string export_dot(const LatticeSpec& spec, bool highlight_singular,
                       std::optional<std::size_t> max_faces) {
  Lattice l = spec.build(max_faces);
  std::vector<int> component_of(l.size(), -1);
  std::vector<std::string> component_comments;
  if (highlight_singular) {
    SingularLocusReport sl = singular_locus(l, max_faces);
    for (std::size_t k = 0; k < sl.components.size(); ++k) {
      const Bits& d = sl.faces[sl.components[k]].D;
      std::string desc = "{";
      bool first = true;
      for (int m : d.members()) {
        component_of[m] = static_cast<int>(k);
        if (!first) desc += ",";
        desc += l.poset().name(m);
        first = false;
      }
      desc += "}";
      component_comments.push_back("// singular component " + std::to_string(k) +
                                   ": " + desc);
    }
  }
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& c : component_comments) os << "  " << c << "\n";
  for (Index i = 0; i < l.size(); ++i) {
    os << "  n" << i << " [label=\"" << l.poset().name(i) << "\"";
    if (component_of[i] >= 0)
      os << ", component=\"" << component_of[i]
         << "\", style=filled, fillcolor=lightcoral";
    os << "];\n";
  }
  for (const auto& [lo, hi] : l.poset().covers())
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hibi
