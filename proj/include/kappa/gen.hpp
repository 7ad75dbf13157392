#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>

namespace kappa {

// Generator symbols. Function-algebra sorts (Lorentz matrix entries Lam^mu_nu,
// translation coordinates a^mu, the dilatation coordinate b and e^{+-b}) and
// enveloping-algebra sorts (D, rotations M^{mu nu} with mu<nu canonical,
// momenta P_mu) share one total order. The order is chosen so that every
// relation set used here rewrites to a terminating normal form:
//   Lam < a < b < e^b < e^-b < D < M(lex) < P_1 < ... < P_{n-1} < P_0.
// P_0 sorts last within the momenta so that series tails in P_0 attach to the
// right of other momenta.
enum class Sort : std::uint8_t {
  LorentzEntry = 0,
  TransCoord = 1,
  BCoord = 2,
  ExpB = 3,
  Dilatation = 4,
  Rotation = 5,
  Momentum = 6,
};

struct Gen {
  Sort sort = Sort::BCoord;
  std::int8_t a = 0;  // first index, or exp sign (+1/-1)
  std::int8_t b = 0;  // second index

  static Gen lorentz(int mu, int nu) {
    return {Sort::LorentzEntry, static_cast<std::int8_t>(mu),
            static_cast<std::int8_t>(nu)};
  }
  static Gen coord(int mu) {
    return {Sort::TransCoord, static_cast<std::int8_t>(mu), 0};
  }
  static Gen bcoord() { return {Sort::BCoord, 0, 0}; }
  static Gen exp_b(int sign) {
    return {Sort::ExpB, static_cast<std::int8_t>(sign), 0};
  }
  static Gen dilatation() { return {Sort::Dilatation, 0, 0}; }
  // requires mu < nu; callers track the sign of M^{nu mu} = -M^{mu nu}
  static Gen rotation(int mu, int nu) {
    return {Sort::Rotation, static_cast<std::int8_t>(mu),
            static_cast<std::int8_t>(nu)};
  }
  static Gen momentum(int mu) {
    return {Sort::Momentum, static_cast<std::int8_t>(mu), 0};
  }

  std::tuple<int, int, int> sort_key() const {
    int k1 = a, k2 = b;
    if (sort == Sort::ExpB) k1 = (a > 0) ? 0 : 1;
    if (sort == Sort::Momentum) k1 = (a == 0) ? 127 : a;
    return {static_cast<int>(sort), k1, k2};
  }

  friend bool operator==(const Gen& x, const Gen& y) {
    return x.sort == y.sort && x.a == y.a && x.b == y.b;
  }
  friend std::strong_ordering operator<=>(const Gen& x, const Gen& y) {
    return x.sort_key() <=> y.sort_key();
  }

  std::string str() const;
};

}  // namespace kappa
