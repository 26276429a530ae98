#include "kcover/error.hpp"

namespace kcover {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_edge: return "invalid-edge";
    case Errc::parse_error: return "parse-error";
    case Errc::unsupported_size: return "unsupported-size";
    case Errc::no_such_graph: return "no-such-graph";
    case Errc::domain_error: return "domain-error";
    case Errc::spec_error: return "spec-error";
    case Errc::precondition_failed: return "precondition-failed";
    case Errc::theorem_violation: return "theorem-violation";
    case Errc::cap_exceeded: return "cap-exceeded";
  }
  return "unknown";
}

}  // namespace kcover
