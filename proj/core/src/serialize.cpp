#include "specfactor/serialize.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "specfactor/errors.hpp"

namespace specfactor::io {
namespace {

json header() { return json{{"schema", kSchemaVersion}}; }

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\r' || last[-1] == '\t')) --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw PreconditionError("potential CSV: cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

json to_json(const PrimeTable& table) {
  json j = header();
  j["count"] = table.size();
  j["primes"] = json::array();
  for (Integer p : table.primes()) j["primes"].push_back(std::to_string(p));
  return j;
}

json to_json(const Factorization& f) {
  json factors = json::object();
  for (const auto& [p, alpha] : f.factors) factors[std::to_string(p)] = alpha;
  return json{{"n", std::to_string(f.n)}, {"factors", factors}};
}

Factorization factorization_from_json(const json& j) {
  Factorization f;
  f.n = std::stoull(j.at("n").get<std::string>());
  for (const auto& [key, value] : j.at("factors").items()) {
    f.factors[std::stoull(key)] = value.get<unsigned>();
  }
  return f;
}

json to_json(const measure::FactorizationRun& run) {
  json j = header();
  j["n"] = run.n;
  j["variant"] = measure::to_string(run.variant);
  j["seed"] = run.seed;
  j["steps"] = json::array();
  for (const auto& r : run.trace) {
    j["steps"].push_back({{"step", r.step},
                          {"prime", r.prime},
                          {"prob", r.probability},
                          {"before", r.before},
                          {"after", r.after},
                          {"divisions", r.divisions},
                          {"draw", r.draw}});
  }
  j["result"] = to_json(run.result);
  j["counts"] = {{"measurements", run.measurements}, {"divisions", run.divisions}};
  return j;
}

namespace {

json node_to_json(const measure::PathNode& node) {
  json j{{"n", node.n}, {"stage", node.stage}};
  if (node.edge_prime != 0) j["prime"] = node.edge_prime;
  if (node.leaf) j["factorization"] = to_json(*node.leaf);
  json children = json::array();
  for (const auto& c : node.children) children.push_back(node_to_json(c));
  j["children"] = std::move(children);
  return j;
}

}  // namespace

json to_json(const measure::PathTree& tree) {
  json j = header();
  j["n"] = tree.n;
  j["leaves"] = tree.leaf_count();
  j["tree"] = node_to_json(tree.root);
  return j;
}

void write_path_edges_csv(const measure::PathTree& tree, std::ostream& os) {
  os << "parent,child,parent_n,child_n,prime,stage\n";
  std::size_t next_id = 0;
  auto walk = [&](auto&& self, const measure::PathNode& node, std::size_t id) -> void {
    for (const auto& c : node.children) {
      const std::size_t child_id = ++next_id;
      os << id << ',' << child_id << ',' << node.n << ',' << c.n << ',' << c.edge_prime << ','
         << c.stage << '\n';
      self(self, c, child_id);
    }
  };
  walk(walk, tree.root, 0);
}

json to_json(const digital::CouplingSet& cs) {
  json j = header();
  j["d"] = cs.d;
  j["target"] = digital::to_string(cs.target);
  j["assignment"] = json::array();
  for (std::size_t t : cs.assignment.table()) j["assignment"].push_back(t);
  j["entries"] = json::array();
  for (std::size_t s = 0; s < cs.j.size(); ++s) {
    const auto mask = static_cast<digital::Mask>(s);
    j["entries"].push_back({{"mask", s},
                            {"bits", digital::mask_bits(mask, cs.d)},
                            {"indices", digital::mask_indices(mask)},
                            {"j", cs.j[s]}});
  }
  return j;
}

digital::CouplingSet coupling_set_from_json(const json& j) {
  digital::CouplingSet cs;
  cs.d = j.at("d").get<unsigned>();
  const auto kind = digital::parse_target_kind(j.value("target", std::string("custom")));
  cs.target = kind.value_or(digital::TargetKind::Custom);
  const std::size_t size = std::size_t{1} << cs.d;
  if (j.contains("assignment")) {
    cs.assignment = digital::Assignment(j.at("assignment").get<std::vector<std::size_t>>());
  } else {
    cs.assignment = digital::Assignment::identity(cs.d);
  }
  cs.j.assign(size, 0.0);
  for (const auto& e : j.at("entries")) {
    digital::Mask mask;
    if (e.contains("indices")) {
      const auto idx = e.at("indices").get<std::vector<unsigned>>();
      mask = digital::mask_from_indices(idx);
    } else {
      mask = e.at("mask").get<digital::Mask>();
    }
    if (mask >= size) throw PreconditionError("coupling set: mask outside 2^d");
    cs.j[mask] = e.at("j").get<double>();
  }
  return cs;
}

json to_json(const GoldbachReport& report) {
  json j = header();
  j["max_even"] = report.max_even;
  j["d"] = report.d;
  j["table_size"] = report.table_size;
  j["all_covered"] = report.all_covered();
  j["uncovered"] = report.uncovered();
  json evens = json::array();
  for (const auto& [e, pair] : report.evens) {
    json row{{"even", e}};
    if (pair) row["pair"] = {pair->first, pair->second};
    evens.push_back(row);
  }
  j["evens"] = std::move(evens);
  j["two_copy"] = {{"checked", report.two_copy_checked},
                   {"levels", report.two_copy_levels},
                   {"products_distinct", report.two_copy_products_distinct},
                   {"max_relative_deviation", report.two_copy_max_deviation},
                   {"match", report.two_copy_match}};
  return j;
}

void write_potential_csv(const susy::PotentialTable& pt, std::ostream& os) {
  os << "x,V\n";
  for (std::size_t i = 0; i < pt.v.size(); ++i) {
    os << format_double(pt.grid.x(i)) << ',' << format_double(pt.v[i]) << '\n';
  }
}

susy::PotentialTable read_potential_csv(std::istream& is) {
  std::string line;
  std::vector<double> xs, vs;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    if (!header_seen) {
      header_seen = true;
      if (line.rfind("x", 0) == 0) continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw PreconditionError("potential CSV: expected x,V rows");
    xs.push_back(parse_double(std::string_view(line).substr(0, comma)));
    vs.push_back(parse_double(std::string_view(line).substr(comma + 1)));
  }
  if (xs.size() < 5 || xs.size() % 2 == 0) {
    throw PreconditionError("potential CSV: need an odd number (>= 5) of nodes");
  }
  const std::size_t half = (xs.size() - 1) / 2;
  const double step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double expected = (static_cast<double>(i) - static_cast<double>(half)) * step;
    if (std::abs(xs[i] - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
      throw PreconditionError("potential CSV: x must be uniform and symmetric about 0");
    }
  }
  susy::PotentialTable pt;
  pt.grid = susy::Grid{step, half};
  pt.v = std::move(vs);
  return pt;
}

json potential_metadata(const susy::PotentialTable& pt, const ResidualStats& stats) {
  json j = header();
  j["targets"] = pt.targets;
  j["offset"] = pt.offset;
  j["grid"] = {{"half_width", pt.grid.half_width()},
               {"step", pt.grid.step},
               {"nodes", pt.grid.size()}};
  j["valid_subgrid"] = {{"lo", -pt.grid.half_width()},
                        {"hi", pt.grid.half_width()},
                        {"clipped", pt.clipped}};
  double worst = 0.0;
  for (double r : stats.riccati) worst = std::max(worst, r);
  j["residuals"] = {{"riccati_per_level", stats.riccati},
                    {"riccati_max", worst},
                    {"recurrence_gap", stats.recurrence_gap}};
  return j;
}

void apply_potential_metadata(const json& meta, susy::PotentialTable& pt) {
  pt.targets = meta.at("targets").get<std::vector<double>>();
  pt.offset = meta.at("offset").get<double>();
  pt.clipped = meta.at("valid_subgrid").value("clipped", false);
}

json to_json(const susy::LloydSystem& sys) {
  json j = header();
  j["m"] = sys.m;
  j["variant"] = susy::to_string(sys.variant);
  j["x"] = sys.x;
  j["w"] = sys.w;
  j["dw"] = sys.dw;
  json rows = json::array();
  for (std::size_t a = 0; a < sys.m; ++a) {
    rows.push_back(std::vector<double>(sys.f.begin() + static_cast<long>(a * sys.m),
                                       sys.f.begin() + static_cast<long>((a + 1) * sys.m)));
  }
  j["f"] = std::move(rows);
  j["b"] = sys.b;
  j["residual"] = sys.residual;
  return j;
}

json to_json(const susy::LloydExperiment& exp) {
  json j = header();
  j["m"] = exp.m;
  j["tolerance"] = exp.tolerance;
  j["published_satisfied"] = exp.published_satisfied;
  j["satisfying_variant"] =
      exp.satisfying_variant ? json(susy::to_string(*exp.satisfying_variant)) : json(nullptr);
  json variants = json::array();
  for (const auto& r : exp.variants) {
    variants.push_back({{"variant", susy::to_string(r.variant)},
                        {"max_residual", r.max_residual},
                        {"worst_row", r.worst_row},
                        {"worst_x", r.worst_x},
                        {"satisfied", r.satisfied}});
  }
  j["variants"] = std::move(variants);
  j["report"] = exp.report;
  return j;
}

json to_json(const susy::SpectrumCheck& check) {
  json j = header();
  j["eigenvalues"] = check.eigenvalues;
  j["threshold"] = check.threshold;
  j["target_spacings"] = check.target_spacings;
  j["measured_spacings"] = check.measured_spacings;
  j["max_spacing_error"] = check.max_spacing_error;
  j["ground_state_error"] = check.ground_state_error;
  j["bound_count_ok"] = check.bound_count_ok;
  j["max_refinement_change"] = check.max_refinement_change;
  return j;
}

}  // namespace specfactor::io
