#pragma once

#include <string>

#include "uckit/common.hpp"

namespace uckit {

/// The equivalent ways a body can certify uniform convexity. Global items
/// carry the conventional letters a-f; local items the letters a-e with a
/// "loc-" prefix.
enum class Item {
  MidConvex,            // a: midpoint ball inclusion
  GlobalScaling,        // b: <d, y-x> >= alpha ||d||_polar ||y-x||^p at LMO points
  ModulusUC,            // c: delta(eps) >= alpha eps^p
  SupportHolderSphere,  // d: grad sigma Hoelder on the polar sphere
  SupportUS,            // e: sigma^q uniformly smooth
  GaugeUC,              // f: gauge^p uniformly convex
  LocalRotundity,       // loc-a: nu(eps, x*, d) >= alpha eps^p
  LocalScaling,         // loc-b
  LocalSupportHolder,   // loc-c
  LocalSupportUS,       // loc-d
  LocalGaugeUC,         // loc-e
};

inline const char* item_code(Item it) {
  switch (it) {
    case Item::MidConvex: return "a";
    case Item::GlobalScaling: return "b";
    case Item::ModulusUC: return "c";
    case Item::SupportHolderSphere: return "d";
    case Item::SupportUS: return "e";
    case Item::GaugeUC: return "f";
    case Item::LocalRotundity: return "loc-a";
    case Item::LocalScaling: return "loc-b";
    case Item::LocalSupportHolder: return "loc-c";
    case Item::LocalSupportUS: return "loc-d";
    case Item::LocalGaugeUC: return "loc-e";
  }
  return "?";
}

inline Item item_from_code(const std::string& code) {
  if (code == "a") return Item::MidConvex;
  if (code == "b") return Item::GlobalScaling;
  if (code == "c") return Item::ModulusUC;
  if (code == "d") return Item::SupportHolderSphere;
  if (code == "e") return Item::SupportUS;
  if (code == "f") return Item::GaugeUC;
  if (code == "loc-a") return Item::LocalRotundity;
  if (code == "loc-b") return Item::LocalScaling;
  if (code == "loc-c") return Item::LocalSupportHolder;
  if (code == "loc-d") return Item::LocalSupportUS;
  if (code == "loc-e") return Item::LocalGaugeUC;
  throw std::invalid_argument("unknown characterization code '" + code + "'");
}

/// What the exponent field of UCParams means for a given item.
enum class ExponentRole {
  ConvexityP,     // p >= 2
  SmoothnessQ,    // q in (1,2]
  HolderQMinus1,  // q-1 in (0,1], Hoelder exponent of a gradient map
};

/// A (constant, exponent) certificate for one characterization.
struct UCParams {
  double alpha = 0.0;
  double exponent = 2.0;
  Item item = Item::ModulusUC;
  ExponentRole role = ExponentRole::ConvexityP;

  static UCParams make(double alpha, double exponent, Item item, ExponentRole role) {
    require(alpha > 0.0 && std::isfinite(alpha), "UCParams: constant must be positive");
    require(exponent > 0.0 && std::isfinite(exponent), "UCParams: exponent must be positive");
    return UCParams{alpha, exponent, item, role};
  }
};

struct TransferResult {
  Item from_item;
  Item to_item;
  UCParams in_params;
  UCParams out_params;
  std::string formula_id;
};

}  // namespace uckit
