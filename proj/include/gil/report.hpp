#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gil/geo.hpp"

namespace gil {

// Structured result of a checker run. A fail verdict always carries at
// least one witness (enforced by finalize()).
struct Witness {
  std::string set_id;
  std::vector<std::pair<std::string, double>> values;
};

struct CheckReport {
  std::string check;
  bool pass = false;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, double>> margins;

  void add_margin(const std::string& name, double value) { margins.emplace_back(name, value); }
  void add_witness(const std::string& set_id,
                   std::vector<std::pair<std::string, double>> values) {
    witnesses.push_back({set_id, std::move(values)});
  }
  // Validates the fail-carries-witness invariant.
  CheckReport& finalize() {
    if (!pass && witnesses.empty()) throw Error("CheckReport: fail verdict without witness");
    return *this;
  }
};

}  // namespace gil
