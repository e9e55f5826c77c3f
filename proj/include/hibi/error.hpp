#pragma once

#include <stdexcept>
#include <string>

namespace hibi {

enum class errc {
  cycle_detected,
  unknown_element,
  not_graded,
  limit_exceeded,
  not_a_lattice,
  not_distributive,
  not_a_cover,
  bad_descriptor,
  not_embedded,
  gamma_not_maximal_chain,
  not_on_variety,
  lattice_mismatch,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

  // Process exit code contract: 2 invalid input, 3 limit exceeded,
  // 4 internal invariant violation.
  int exit_code() const {
    switch (code_) {
      case errc::limit_exceeded:
        return 3;
      case errc::internal:
        return 4;
      default:
        return 2;
    }
  }

private:
  errc code_;
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::cycle_detected: return "CycleDetected";
    case errc::unknown_element: return "UnknownElement";
    case errc::not_graded: return "NotGraded";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::not_a_lattice: return "NotALattice";
    case errc::not_distributive: return "NotDistributive";
    case errc::not_a_cover: return "NotACover";
    case errc::bad_descriptor: return "BadDescriptor";
    case errc::not_embedded: return "NotEmbedded";
    case errc::gamma_not_maximal_chain: return "GammaNotMaximalChain";
    case errc::not_on_variety: return "NotOnVariety";
    case errc::lattice_mismatch: return "LatticeMismatch";
    case errc::internal: return "InternalError";
  }
  return "Error";
}

}  // namespace hibi
