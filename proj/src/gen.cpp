#include "kappa/gen.hpp"

namespace kappa {

std::string Gen::str() const {
  switch (sort) {
    case Sort::LorentzEntry:
      return "L^" + std::to_string(a) + "_" + std::to_string(b);
    case Sort::TransCoord:
      return "a^" + std::to_string(a);
    case Sort::BCoord:
      return "b";
    case Sort::ExpB:
      return a > 0 ? "e^b" : "e^-b";
    case Sort::Dilatation:
      return "D";
    case Sort::Rotation:
      return "M^{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case Sort::Momentum:
      return "P_" + std::to_string(a);
  }
  return "?";
}

}  // namespace kappa
