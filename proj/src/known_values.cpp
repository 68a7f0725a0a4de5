#include "bohr/known_values.hpp"

#include <cmath>
#include <sstream>

#include "bohr/core_radius.hpp"
#include "bohr/multidim.hpp"

namespace bohr {

namespace {

std::string radius_label(double p, double q) {
  std::ostringstream os;
  os << "R_{" << p << "," << q << "}(C)";
  return os.str();
}

}  // namespace

std::vector<KnownValue> known_values() {
  std::vector<KnownValue> rows;
  rows.push_back({radius_label(1, 1), 1.0 / 3.0, radius_scalar(BohrParams(1, 1)).value(),
                  "Bohr's theorem"});
  for (double p : {1.0, 1.25, 1.5, 1.75, 2.0}) {
    rows.push_back({radius_label(p, 1), p / (2.0 + p), radius_scalar(BohrParams(p, 1)).value(),
                    "p/(2+p), Blasco (2010)"});
  }
  for (auto [p, q] : {std::pair{2.0, 2.0}, {3.0, 2.0}, {2.0, 5.0}, {4.0, 4.0}}) {
    rows.push_back({radius_label(p, q), 1.0 / std::sqrt(2.0),
                    radius_scalar(BohrParams(p, q)).value(), "extremal z*phi_{1/sqrt 2}"});
  }
  rows.push_back({"H^n_2", std::sqrt(3.0 / 7.0), hpn_exact(2.0), "half-plane map (1+z1)/(1-z1)"});
  return rows;
}

}  // namespace bohr
