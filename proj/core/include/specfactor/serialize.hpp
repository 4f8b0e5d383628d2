#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "specfactor/digital.hpp"
#include "specfactor/measure.hpp"
#include "specfactor/numtheory.hpp"
#include "specfactor/susy.hpp"

// JSON and CSV forms of the domain types. Every JSON document carries
// "schema": 1. Integers that key maps are written as decimal strings.
namespace specfactor::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const PrimeTable& table);
json to_json(const Factorization& f);
Factorization factorization_from_json(const json& j);

json to_json(const measure::FactorizationRun& run);
json to_json(const measure::PathTree& tree);
// parent,child,parent_n,child_n,prime,stage ; node ids in depth-first order.
void write_path_edges_csv(const measure::PathTree& tree, std::ostream& os);

json to_json(const digital::CouplingSet& cs);
digital::CouplingSet coupling_set_from_json(const json& j);

json to_json(const GoldbachReport& report);

// "x,V" header then one row per node, shortest round-trip decimal, '.' separator.
void write_potential_csv(const susy::PotentialTable& pt, std::ostream& os);
// Rebuilds the grid from the x column (uniform, symmetric about 0).
susy::PotentialTable read_potential_csv(std::istream& is);

struct ResidualStats {
  std::vector<double> riccati;  // per k
  double recurrence_gap = 0.0;  // |unrolled V_M - recurrence V_M|
};
json potential_metadata(const susy::PotentialTable& pt, const ResidualStats& stats);
// Restores targets and offset from metadata written by potential_metadata.
void apply_potential_metadata(const json& meta, susy::PotentialTable& pt);

json to_json(const susy::LloydSystem& sys);
json to_json(const susy::LloydExperiment& exp);
json to_json(const susy::SpectrumCheck& check);

// Shortest decimal that round-trips, independent of locale.
std::string format_double(double v);

}  // namespace specfactor::io
