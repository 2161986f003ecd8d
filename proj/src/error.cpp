#include "edmnet/error.hpp"

namespace edmnet {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::precondition: return "precondition";
    case Errc::parse: return "parse";
    case Errc::alignment: return "alignment";
    case Errc::ambiguity: return "ambiguity";
    case Errc::insufficient_tail: return "insufficient-tail";
    case Errc::degenerate_series: return "degenerate-series";
    case Errc::insufficient_support: return "insufficient-support";
    case Errc::undefined_metric: return "undefined-metric";
    case Errc::membership: return "membership";
    case Errc::short_series: return "short-series";
    case Errc::lookup: return "lookup";
    case Errc::segmentation: return "segmentation";
    case Errc::missing_artifact: return "missing-artifact";
    case Errc::io: return "io";
    case Errc::infeasible: return "infeasible";
  }
  return "unknown";
}

}  // namespace edmnet
