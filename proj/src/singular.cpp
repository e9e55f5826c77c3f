#include "hibi/singular.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hibi/error.hpp"

namespace hibi {

SingularLocusReport singular_locus(const Lattice& l, std::optional<std::size_t> cap) {
  SingularLocusReport rep;
  rep.variety_dim = l.dim();
  rep.faces = enumerate_faces(l, cap);
  rep.reports.resize(rep.faces.size());

  // Per-face work is independent; fan out over a small worker pool and
  // assemble single-threaded for a deterministic report.
  const std::size_t nfaces = rep.faces.size();
  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        nfaces > 16 ? 8u : 1u);
  if (workers <= 1) {
    for (std::size_t i = 0; i < nfaces; ++i)
      rep.reports[i] = cotangent_report(l, rep.faces[i].D);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < nfaces; i = next.fetch_add(1))
          rep.reports[i] = cotangent_report(l, rep.faces[i].D);
      });
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < nfaces; ++i)
    if (rep.reports[i].tangent_dim > rep.variety_dim) rep.singular_faces.push_back(i);
  rep.is_smooth_variety = rep.singular_faces.empty();

  for (std::size_t i : rep.singular_faces) {
    bool maximal = true;
    for (std::size_t j : rep.singular_faces)
      if (i != j && rep.faces[i].D.subset_of(rep.faces[j].D)) { maximal = false; break; }
    if (maximal) rep.components.push_back(i);
  }
  return rep;
}

PointClassification classify_point(const Lattice& l, const VarietyPoint& p) {
  Bits d = support(l, p);  // NotOnVariety / InternalError as appropriate
  PointClassification out;
  out.face = make_face(l, d);
  out.report = cotangent_report(l, d);
  out.smooth_at_point = (out.report.tangent_dim == l.dim());
  return out;
}

}  // namespace hibi
