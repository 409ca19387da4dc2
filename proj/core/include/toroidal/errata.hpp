#pragma once

#include "toroidal/root_datum.hpp"

#include <string>
#include <vector>

namespace toroidal {

struct CartanInstance {
  SuperType type = SuperType::A;
  int m = 0;
  int n = 0;
  int i = 0;
  int j = 0;
  std::string computed;
  std::string printed;
  friend bool operator==(const CartanInstance&, const CartanInstance&) = default;
};

/// One correction to a printed table, keyed by the check that forces it.
struct Erratum {
  std::string id;
  std::string location;
  std::string printed;
  std::string adopted;
  std::string forcing_check;
  std::vector<SuperType> types;
  std::vector<CartanInstance> instances;  // only for Cartan-matrix entries
};

/// The shipped ledger, parsed once.
const std::vector<Erratum>& errata();
int errata_version();

/// Entries that apply to the given type.
std::vector<Erratum> errata_for(SuperType t);

/// Cartan mismatches of `datum` that no ledger instance accounts for.
std::vector<CartanMismatch> unexplained_mismatches(const RootDatum& datum);

}  // namespace toroidal
