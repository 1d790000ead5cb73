#include "lpdeinv/errors.hpp"

namespace lpdeinv {

const char* condition_name(Condition c) noexcept {
  switch (c) {
    case Condition::Parabolic:
      return "parabolic";
    case Condition::NotSecondOrder:
      return "not-second-order";
    case Condition::CZero:
      return "c-zero";
    case Condition::D0Nonzero:
      return "necessary-condition";
    case Condition::D0Zero:
      return "D0-zero";
    case Condition::GammaZero:
      return "gamma-zero";
    case Condition::Chi1Zero:
      return "chi1-zero";
    case Condition::Gamma0Zero:
      return "gamma0-zero";
    case Condition::Gamma0Nonzero:
      return "gamma0-nonzero";
    case Condition::OutsideW0:
      return "outside-W0";
    case Condition::DegenerateTransform:
      return "degenerate-transformation";
    case Condition::DegenerateMap:
      return "degenerate-map";
    case Condition::Shape:
      return "shape";
    case Condition::StratumMismatch:
      return "stratum-mismatch";
  }
  return "unknown";
}

}  // namespace lpdeinv
