/*
 * Copyright 2026 The multiunit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "multiunit/affine.hpp"
#include "multiunit/induced.hpp"
#include "multiunit/scalable2.hpp"
#include "multiunit/verify.hpp"

namespace multiunit::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string mech = "triage";
  std::optional<int> m;
  std::string w = "1";
  std::string theta_a = "1";
  std::string theta_b = "1";
  std::string alpha;
  std::string alphas;
  std::string alice;
  std::string bob;
  std::optional<int> denom;
  std::optional<std::string> max;
  std::uint64_t seed = 0;
  std::size_t random = 0;
  std::string out = "json";
  std::string instances;
  std::string props = "truthful,feasible,scalable,ir";
  std::string emit;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? text.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<Rat> parse_rats(std::string_view text) {
  std::vector<Rat> out;
  for (const auto& part : split(text, ',')) out.push_back(Rat::parse(part));
  return out;
}

Json rats(std::span<const Rat> xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(x.str());
  return arr;
}

std::string joined(std::span<const Rat> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& c : cells) {
    line += (first ? "" : ",") + csv_cell(c);
    first = false;
  }
  return line + "\n";
}

Json allocation_json(Allocation2 a) { return Json::array({a.alice, a.bob}); }

void add_outcome(Json& j, const Outcome& o) {
  j["allocation"] = allocation_json(o.allocation);
  j["pay_alice"] = o.pay_alice.str();
  j["pay_bob"] = o.pay_bob.str();
  j["util_alice"] = o.util_alice.str();
  j["util_bob"] = o.util_bob.str();
  j["welfare"] = o.welfare.str();
}

std::string ratio_str(const std::optional<Rat>& r) { return r ? r->str() : "inf"; }

Json counterexample_json(const Counterexample& c) {
  Json j;
  j["alice"] = rats(c.alice.values());
  j["bob"] = rats(c.bob.values());
  j["bidder"] = c.bidder == Bidder::Alice ? "alice" : "bob";
  if (c.misreport) j["misreport"] = rats(c.misreport->values());
  if (c.factor) j["factor"] = c.factor->str();
  j["truthful_utility"] = c.truthful_utility.str();
  j["deviating_utility"] = c.deviating_utility.str();
  j["detail"] = c.detail;
  return j;
}

Json report_json(const PropertyReport& r) {
  Json j;
  j["property"] = r.property;
  j["passed"] = r.passed;
  j["instances"] = r.instances;
  if (r.counterexample) j["counterexample"] = counterexample_json(*r.counterexample);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Mechanism selection ------------------------------------------------------

struct Selected {
  Mechanism mech;
  std::string description;
  std::optional<Rat> weight;  // set for the families with a VCG weight
};

Selected select_mechanism(const Options& o, int m) {
  if (o.mech == "strawman-firstprice") return {first_price_strawman(), "strawman-firstprice", std::nullopt};
  MechanismParams params;
  std::optional<Rat> weight;
  if (o.mech == "vcg") {
    const Rat w = Rat::parse(o.w);
    if (w.sign() <= 0) throw Error(Errc::NonPositiveWeight, "w must be positive");
    params = WvcgParams{w};
    weight = w;
  } else if (o.mech == "triage") {
    auto p = make_triage_params(Rat::parse(o.w), Rat::parse(o.theta_a), Rat::parse(o.theta_b));
    weight = p.w;
    params = p;
  } else if (o.mech == "shifted") {
    if (o.alpha.empty()) throw Error(Errc::Parse, "--alpha is required for shifted");
    params = make_shifted_params(Rat::parse(o.alpha));
  } else if (o.mech == "fractions") {
    if (o.alphas.empty()) throw Error(Errc::Parse, "--alphas is required for fractions");
    auto p = make_fractions_params(parse_rats(o.alphas));
    if (static_cast<int>(p.alphas.size()) != m - 1) {
      throw Error(Errc::LengthMismatch, "fractions needs m - 1 = " + std::to_string(m - 1) + " alphas");
    }
    params = p;
  } else {
    throw Error(Errc::Parse, "unknown mechanism '" + o.mech + "'");
  }
  return {make_mechanism(params), describe(params), weight};
}

// Universe of instances ----------------------------------------------------

struct Universe {
  std::vector<Valuation> valuations;
  Json spec;
};

Universe build_universe(const Options& o, int default_denom, const std::string& default_max) {
  Universe u;
  if (!o.instances.empty()) {
    std::ifstream in(o.instances, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "cannot read " + o.instances);
    std::stringstream buf;
    buf << in.rdbuf();
    auto file = parse_instance_file(buf.str());
    u.valuations = std::move(file.valuations);
    u.spec["instances"] = o.instances;
    u.spec["m"] = file.m;
  } else {
    Grid grid{o.m.value_or(2), Rat::parse(o.max.value_or(default_max)), o.denom.value_or(default_denom)};
    if (grid.m < 2) throw Error(Errc::TooShort, "--m must be at least 2");
    if (grid.denominator <= 0) throw Error(Errc::Parse, "--denom must be positive");
    u.valuations = enumerate(grid);
    u.spec["m"] = grid.m;
    u.spec["denom"] = grid.denominator;
    u.spec["max"] = grid.max_value.str();
    if (o.random > 0) {
      std::set<std::string> seen;
      for (const auto& v : u.valuations) seen.insert(v.str());
      for (auto& v : random_valuations(grid, o.random, o.seed)) {
        if (seen.insert(v.str()).second) u.valuations.push_back(std::move(v));
      }
      u.spec["random"] = o.random;
      u.spec["seed"] = o.seed;
    }
  }
  if (!o.emit.empty()) {
    std::ofstream file(o.emit, std::ios::binary);
    if (!file) throw Error(Errc::Parse, "cannot write " + o.emit);
    const int m = u.valuations.empty() ? o.m.value_or(2) : static_cast<int>(u.valuations.front().items());
    file << format_instance_file(InstanceFile{m, u.valuations});
  }
  return u;
}

int universe_items(const Universe& u, const Options& o) {
  return u.valuations.empty() ? o.m.value_or(2) : static_cast<int>(u.valuations.front().items());
}

// Subcommands --------------------------------------------------------------

int cmd_run(const Options& o, std::ostream& out) {
  std::optional<Valuation> alice, bob;
  if (!o.instances.empty()) {
    const auto u = build_universe(o, 1, "1");
    if (u.valuations.size() < 2) throw Error(Errc::Parse, "run needs two valuations in the instance file");
    alice = u.valuations[0];
    bob = u.valuations[1];
  } else {
    if (o.alice.empty() || o.bob.empty()) throw Error(Errc::Parse, "run needs --alice and --bob");
    alice = parse_valuation(o.alice);
    bob = parse_valuation(o.bob);
  }
  if (alice->items() != bob->items()) throw Error(Errc::LengthMismatch, "--alice and --bob differ in length");
  const auto sel = select_mechanism(o, static_cast<int>(alice->items()));
  const Outcome outcome = sel.mech.run(*alice, *bob);
  const auto opt = optimal_welfare2(*alice, *bob);
  std::optional<Rat> r;
  if (!(outcome.welfare.is_zero() && opt.welfare.sign() > 0)) r = ratio(opt.welfare, outcome.welfare);
  if (o.out == "csv") {
    out << "alice,bob,alloc_a,alloc_b,pay_a,pay_b,welfare,opt,ratio\n";
    out << csv_row({joined(alice->values()), joined(bob->values()), std::to_string(outcome.allocation.alice),
                    std::to_string(outcome.allocation.bob), outcome.pay_alice.str(), outcome.pay_bob.str(),
                    outcome.welfare.str(), opt.welfare.str(), ratio_str(r)});
    return kPass;
  }
  Json j;
  j["command"] = "run";
  j["mechanism"] = sel.description;
  j["alice"] = rats(alice->values());
  j["bob"] = rats(bob->values());
  add_outcome(j, outcome);
  j["opt"] = opt.welfare.str();
  j["ratio"] = ratio_str(r);
  emit_json(out, j);
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto u = build_universe(o, 4, "2");
  const auto sel = select_mechanism(o, universe_items(u, o));
  const std::vector<Rat> factors{Rat(2), Rat(3), Rat(1, 2)};
  std::vector<PropertyReport> reports;
  for (const auto& prop : split(o.props, ',')) {
    if (prop == "truthful") reports.push_back(check_truthfulness(sel.mech, u.valuations));
    else if (prop == "feasible") reports.push_back(check_feasibility(sel.mech, u.valuations));
    else if (prop == "ir") reports.push_back(check_individual_rationality(sel.mech, u.valuations));
    else if (prop == "scalable") reports.push_back(check_scalability(sel.mech, u.valuations, factors));
    else throw Error(Errc::Parse, "unknown property '" + prop + "'");
  }
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (o.out == "csv") {
    out << "property,passed,instances,alice,bob,bidder,misreport,factor,truthful_utility,deviating_utility\n";
    for (const auto& r : reports) {
      if (!r.counterexample) {
        out << csv_row({r.property, r.passed ? "true" : "false", std::to_string(r.instances), "", "", "", "", "",
                        "", ""});
        continue;
      }
      const auto& c = *r.counterexample;
      out << csv_row({r.property, r.passed ? "true" : "false", std::to_string(r.instances), joined(c.alice.values()),
                      joined(c.bob.values()), c.bidder == Bidder::Alice ? "alice" : "bob",
                      c.misreport ? joined(c.misreport->values()) : "", c.factor ? c.factor->str() : "",
                      c.truthful_utility.str(), c.deviating_utility.str()});
    }
  } else {
    Json j;
    j["command"] = "verify";
    j["mechanism"] = sel.description;
    j["universe"] = u.spec;
    j["valuations"] = u.valuations.size();
    j["properties"] = Json::array();
    for (const auto& r : reports) j["properties"].push_back(report_json(r));
    j["passed"] = all;
    emit_json(out, j);
  }
  return all ? kPass : kFail;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto u = build_universe(o, 4, "2");
  const auto sel = select_mechanism(o, universe_items(u, o));
  const bool csv = o.out == "csv";
  const auto result = sweep_approximation(sel.mech, u.valuations, csv);
  auto row_cells = [](const SweepRow& row) {
    return std::vector<std::string>{joined(row.alice.values()),        joined(row.bob.values()),
                                    std::to_string(row.outcome.allocation.alice),
                                    std::to_string(row.outcome.allocation.bob),
                                    row.outcome.pay_alice.str(),       row.outcome.pay_bob.str(),
                                    row.outcome.welfare.str(),         row.opt.str(),
                                    ratio_str(row.ratio)};
  };
  if (csv) {
    out << "alice,bob,alloc_a,alloc_b,pay_a,pay_b,welfare,opt,ratio\n";
    for (const auto& row : result.rows) {
      const auto cells = row_cells(row);
      std::string line;
      for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + csv_cell(cells[i]);
      out << line << "\n";
    }
    return kPass;
  }
  Json j;
  j["command"] = "sweep";
  j["mechanism"] = sel.description;
  j["universe"] = u.spec;
  j["instances"] = result.instances;
  j["unbounded"] = result.unbounded;
  j["worst_ratio"] = result.unbounded ? std::string("inf") : result.worst_ratio.str();
  if (result.worst) {
    Json w;
    w["alice"] = rats(result.worst->alice.values());
    w["bob"] = rats(result.worst->bob.values());
    add_outcome(w, result.worst->outcome);
    w["opt"] = result.worst->opt.str();
    w["ratio"] = ratio_str(result.worst->ratio);
    j["witness"] = w;
  }
  emit_json(out, j);
  return kPass;
}

int cmd_probe(const Options& o, std::ostream& out) {
  const auto sel = select_mechanism(o, 2);
  if (o.m && *o.m != 2) throw Error(Errc::LengthMismatch, "probe works on 2-item mechanisms");
  const auto grid = unit_grid(o.denom.value_or(40));
  const auto sample = extract_normal_form(sel.mech, grid, grid);
  const auto fitted = read_triage_params(sample);
  const auto checks = probe_characterization(sample, fitted);
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  if (o.out == "csv") {
    out << "id,name,passed,points,detail\n";
    for (const auto& c : checks) {
      out << csv_row({std::string(1, c.id), c.name, c.passed ? "true" : "false", std::to_string(c.points), c.detail});
    }
  } else {
    Json j;
    j["command"] = "probe";
    j["mechanism"] = sel.description;
    j["denom"] = o.denom.value_or(40);
    j["fitted"] = {{"w", fitted.w.str()}, {"theta_a", fitted.theta_a.str()}, {"theta_b", fitted.theta_b.str()}};
    j["checks"] = Json::array();
    for (const auto& c : checks) {
      Json cj;
      cj["id"] = std::string(1, c.id);
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      cj["points"] = c.points;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      j["checks"].push_back(cj);
    }
    j["summary"] = std::to_string(passed) + "/" + std::to_string(checks.size());
    emit_json(out, j);
  }
  return passed == static_cast<std::ptrdiff_t>(checks.size()) ? kPass : kFail;
}

int cmd_fit(const Options& o, std::ostream& out) {
  const int m = o.m.value_or(2);
  const auto sel = select_mechanism(o, m);
  struct FitRow {
    std::string index;
    std::optional<FittedParams> params;
    std::string error;
  };
  std::vector<FitRow> rows;
  std::optional<PropertyReport> equalities;
  if (m == 2) {
    const auto grid = unit_grid(o.denom.value_or(40));
    FitRow row{"normal-form", std::nullopt, ""};
    try {
      row.params = fit_triage_params(extract_normal_form(sel.mech, grid, grid));
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  } else {
    bool all_fitted = true;
    for (const auto& idx : valid_indices(m)) {
      FitRow row{idx.str(), std::nullopt, ""};
      try {
        row.params = fit_induced_params(sel.mech, m, idx);
      } catch (const Error& e) {
        row.error = e.what();
        all_fitted = false;
      }
      rows.push_back(row);
    }
    if (all_fitted) equalities = check_param_equalities(sel.mech, m, all_index_pairs(m));
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.error.empty(); }) &&
                  (!equalities || equalities->passed);
  if (o.out == "csv") {
    out << "index,w,theta_a,theta_b,error\n";
    for (const auto& r : rows) {
      out << csv_row({r.index, r.params ? r.params->w.str() : "", r.params ? r.params->theta_a.str() : "",
                      r.params ? r.params->theta_b.str() : "", r.error});
    }
  } else {
    Json j;
    j["command"] = "fit";
    j["mechanism"] = sel.description;
    j["m"] = m;
    j["fits"] = Json::array();
    for (const auto& r : rows) {
      Json rj;
      rj["index"] = r.index;
      if (r.params) {
        rj["w"] = r.params->w.str();
        rj["theta_a"] = r.params->theta_a.str();
        rj["theta_b"] = r.params->theta_b.str();
      } else {
        rj["error"] = r.error;
      }
      j["fits"].push_back(rj);
    }
    if (equalities) j["equalities"] = report_json(*equalities);
    j["passed"] = ok;
    emit_json(out, j);
  }
  return ok ? kPass : kFail;
}

std::string range_str(const std::vector<Allocation2>& range) {
  std::string s;
  for (const auto& a : range) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(a.alice) + "," + std::to_string(a.bob) + ")";
  return s;
}

int cmd_affine(const Options& o, std::ostream& out) {
  const auto u = build_universe(o, 10, "1");
  const int m = universe_items(u, o);
  if (m != 2) throw Error(Errc::LengthMismatch, "affine search is limited to m = 2");
  const auto sel = select_mechanism(o, m);
  const auto samples = collect_samples(sel.mech, u.valuations);
  const auto verdict = affine_witness(samples);
  const std::string name = verdict.rationalizable ? "Rationalizable" : "NotAffine";
  bool replayed = true;
  if (verdict.certificate) replayed = certificate_reproduces(*verdict.certificate, samples);
  for (const auto& ref : verdict.refutations) replayed = replayed && refutation_holds(ref, samples);
  if (o.out == "csv") {
    out << "verdict,samples,ranges_checked,range,alpha_a,alpha_b,replayed\n";
    const auto* c = verdict.certificate ? &*verdict.certificate : nullptr;
    out << csv_row({name, std::to_string(samples.size()), std::to_string(verdict.ranges_checked),
                    c ? range_str(c->range) : "", c ? c->alpha_a.str() : "", c ? c->alpha_b.str() : "",
                    replayed ? "true" : "false"});
    return replayed ? kPass : kFail;
  }
  Json j;
  j["command"] = "affine";
  j["mechanism"] = sel.description;
  j["universe"] = u.spec;
  j["samples"] = samples.size();
  j["outputs"] = Json::array();
  for (const auto& a : verdict.outputs) j["outputs"].push_back(allocation_json(a));
  j["ranges_checked"] = verdict.ranges_checked;
  j["verdict"] = name;
  if (verdict.certificate) {
    const auto& c = *verdict.certificate;
    Json cj;
    cj["range"] = Json::array();
    for (const auto& a : c.range) cj["range"].push_back(allocation_json(a));
    cj["alpha_a"] = c.alpha_a.str();
    cj["alpha_b"] = c.alpha_b.str();
    cj["betas"] = Json::array();
    for (const auto& [a, b] : c.betas) cj["betas"].push_back(Json::array({allocation_json(a), b.str()}));
    if (c.ratio_interval) {
      cj["ratio_interval"] = Json::array({c.ratio_interval->first.str(),
                                          c.ratio_interval->second ? c.ratio_interval->second->str() : "inf"});
    }
    j["certificate"] = cj;
  }
  j["refutations"] = Json::array();
  for (const auto& ref : verdict.refutations) {
    Json rj;
    rj["range"] = Json::array();
    for (const auto& a : ref.range) rj["range"].push_back(allocation_json(a));
    rj["normalization"] = ref.normalization == Normalization::AlicePinned ? "alice" : "bob";
    rj["free_weight_multiplier"] = ref.free_weight_multiplier.str();
    rj["rows"] = Json::array();
    for (const auto& row : ref.rows) {
      const auto& s = samples.at(row.sample);
      rj["rows"].push_back(Json::array({joined(s.alice.values()), joined(s.bob.values()),
                                        allocation_json(s.chosen), allocation_json(row.alternative),
                                        row.multiplier.str()}));
    }
    j["refutations"].push_back(rj);
  }
  j["replayed"] = replayed;
  emit_json(out, j);
  return replayed ? kPass : kFail;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--mech", o.mech, "vcg, triage, shifted, fractions or strawman-firstprice");
  sub->add_option("--m", o.m, "number of items");
  sub->add_option("--w", o.w, "VCG weight");
  sub->add_option("--theta-a", o.theta_a);
  sub->add_option("--theta-b", o.theta_b);
  sub->add_option("--alpha", o.alpha, "shifted maximizer offset");
  sub->add_option("--alphas", o.alphas, "fractions auction, comma separated");
  sub->add_option("--alice", o.alice, "valuation, e.g. 0,3,5");
  sub->add_option("--bob", o.bob);
  sub->add_option("--denom", o.denom, "grid denominator");
  sub->add_option("--max", o.max, "largest grid value");
  sub->add_option("--seed", o.seed);
  sub->add_option("--random", o.random, "extra seeded random valuations");
  sub->add_option("--out", o.out)->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--instances", o.instances, "instance file (JSON)");
  sub->add_option("--emit-instances", o.emit, "write the instance universe to a file");
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, std::string("instance file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer() || !j.contains("valuations") ||
      !j["valuations"].is_array()) {
    throw Error(Errc::Parse, "instance file needs integer \"m\" and array \"valuations\"");
  }
  InstanceFile file;
  file.m = j["m"].get<int>();
  for (const auto& row : j["valuations"]) {
    if (!row.is_array()) throw Error(Errc::Parse, "each valuation must be an array of strings");
    std::vector<Rat> values;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw Error(Errc::Parse, "valuation entries must be strings");
      values.push_back(Rat::parse(cell.get<std::string>()));
    }
    Valuation v(std::move(values));
    if (static_cast<int>(v.items()) != file.m) throw Error(Errc::LengthMismatch, "valuation length is not m + 1");
    file.valuations.push_back(std::move(v));
  }
  return file;
}

std::string format_instance_file(const InstanceFile& file) {
  std::string s = "{\n  \"m\": " + std::to_string(file.m) + ",\n  \"valuations\": [";
  for (std::size_t i = 0; i < file.valuations.size(); ++i) {
    s += i ? ",\n    [" : "\n    [";
    const auto values = file.valuations[i].values();
    for (std::size_t k = 0; k < values.size(); ++k) s += (k ? ", \"" : "\"") + values[k].str() + "\"";
    s += "]";
  }
  s += file.valuations.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return s;
}

Valuation parse_valuation(std::string_view text) { return Valuation(parse_rats(text)); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-bidder multi-unit auction mechanisms and their verifiers", "multiunit-cli"};
  app.require_subcommand(1);
  Options o;
  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"run", "run one instance", cmd_run},
      {"verify", "check properties over a grid", cmd_verify},
      {"sweep", "worst approximation ratio over a grid", cmd_sweep},
      {"probe", "2-item normal form characterization checks", cmd_probe},
      {"fit", "fit triage parameters (normal form or induced mechanisms)", cmd_fit},
      {"affine", "search for an affine maximizer reproducing the samples", cmd_affine},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    if (std::string_view(c.name) == "verify") sub->add_option("--props", o.props, "truthful,feasible,scalable,ir");
    subs.push_back(sub);
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      return commands[i].fn(o, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return e.code() == Errc::InfeasibleMechanism ? kFail : kUsage;
    }
  }
  return kUsage;
}

}  // namespace multiunit::cli
