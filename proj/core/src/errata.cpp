#include "toroidal/errata.hpp"

#include "errata_data.hpp"

#include <json.hpp>

#include <algorithm>

namespace toroidal {

namespace {

struct Ledger {
  int version = 0;
  std::vector<Erratum> entries;
};

Ledger load() {
  auto doc = nlohmann::json::parse(detail::kErrataJson);
  Ledger out;
  out.version = doc.at("version").get<int>();
  for (const auto& e : doc.at("entries")) {
    Erratum x;
    x.id = e.at("id");
    x.location = e.at("location");
    x.printed = e.at("printed");
    x.adopted = e.at("adopted");
    x.forcing_check = e.at("forcing_check");
    for (const auto& t : e.at("types")) x.types.push_back(parse_super_type(t.get<std::string>()));
    if (e.contains("instances"))
      for (const auto& c : e["instances"])
        x.instances.push_back({parse_super_type(c.at("type").get<std::string>()), c.at("m"), c.at("n"),
                               c.at("i"), c.at("j"), c.at("computed"), c.at("printed")});
    out.entries.push_back(std::move(x));
  }
  return out;
}

const Ledger& ledger() {
  static const Ledger l = load();
  return l;
}

}  // namespace

const std::vector<Erratum>& errata() { return ledger().entries; }

int errata_version() { return ledger().version; }

std::vector<Erratum> errata_for(SuperType t) {
  std::vector<Erratum> out;
  for (const auto& e : errata())
    if (std::find(e.types.begin(), e.types.end(), t) != e.types.end()) out.push_back(e);
  return out;
}

std::vector<CartanMismatch> unexplained_mismatches(const RootDatum& datum) {
  std::vector<CartanMismatch> out;
  const auto& p = datum.params;
  for (const auto& mm : appendix_crosscheck(datum)) {
    CartanInstance want{p.type, p.m, p.n, mm.i, mm.j, mm.computed.str(), mm.printed.str()};
    bool found = false;
    for (const auto& e : errata())
      if (std::find(e.instances.begin(), e.instances.end(), want) != e.instances.end()) found = true;
    if (!found) out.push_back(mm);
  }
  return out;
}

}  // namespace toroidal
