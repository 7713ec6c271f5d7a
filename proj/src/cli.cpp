#include "aen/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "aen/protocol.hpp"
#include "aen/rates.hpp"
#include "aen/reg.hpp"

namespace aen::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// State files

PureState parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed state file: ") + e.what());
  }
  std::vector<Party> parties;
  std::vector<Complex> amps;
  try {
    if (!doc.is_object()) throw InputError("state file must be a JSON object");
    for (const auto& p : doc.at("parties")) {
      const auto dim = p.at("dim").get<std::int64_t>();
      if (dim < 1) throw InputError("party dimension must be >= 1");
      parties.push_back({p.at("label").get<std::string>(), static_cast<std::size_t>(dim)});
    }
    for (const auto& a : doc.at("amplitudes")) {
      if (!a.is_array() || a.size() != 2) throw InputError("amplitudes must be [re, im] pairs");
      amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed state file: ") + e.what());
  }
  PartyLayout layout = [&] {
    try {
      return PartyLayout(std::move(parties));
    } catch (const InvalidArgument& e) {
      throw InputError(std::string("invalid layout: ") + e.what());
    }
  }();
  if (amps.size() != layout.total_dim()) {
    throw ShapeMismatch("state file has " + std::to_string(amps.size()) +
                        " amplitudes but the layout needs " + std::to_string(layout.total_dim()));
  }
  Vector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
  return PureState(std::move(layout), std::move(v));
}

PureState parse_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open state file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string format_state_json(const PureState& psi) {
  json doc;
  doc["parties"] = json::array();
  for (const auto& p : psi.layout().parties()) {
    doc["parties"].push_back({{"label", p.label}, {"dim", p.dim}});
  }
  doc["amplitudes"] = json::array();
  for (const auto& a : psi.amplitudes()) doc["amplitudes"].push_back({a.real(), a.imag()});
  return doc.dump() + "\n";
}

void write_state_file(const std::string& path, const PureState& psi) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write state file '" + path + "'");
  out << format_state_json(psi);
  if (!out) throw InputError("failed writing state file '" + path + "'");
}

// ---------------------------------------------------------------------------
// Reports

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json to_json(const Report& report) {
  json j;
  j["command"] = report.command;
  j["inputs"] = report.inputs;
  j["results"] = report.results;
  j["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  j["tool_version"] = report.tool_version;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  r.tool_version = j.at("tool_version").get<std::string>();
  return r;
}

std::string format_machine(const Report& report) { return to_json(report).dump(2) + "\n"; }

namespace {

std::string scalar_text(const json& v) {
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(10) << v.get<double>();
    return s.str();
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostream& out, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render(out, k, x, indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    // Table with the first row's keys as columns.
    out << pad << key << ":\n";
    std::vector<std::string> cols;
    for (const auto& [k, x] : v.front().items()) cols.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : v) {
      auto& line = cells.emplace_back();
      for (std::size_t c = 0; c < cols.size(); ++c) {
        line.push_back(row.contains(cols[c]) ? scalar_text(row[cols[c]]) : "");
        width[c] = std::max(width[c], line.back().size());
      }
    }
    out << pad << "  ";
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c]) + 2) << cols[c];
    }
    out << '\n';
    for (const auto& line : cells) {
      out << pad << "  ";
      for (std::size_t c = 0; c < cols.size(); ++c) {
        out << std::left << std::setw(static_cast<int>(width[c]) + 2) << line[c];
      }
      out << '\n';
    }
  } else if (v.is_array()) {
    out << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << "]\n";
  } else {
    out << pad << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace

std::string format_human(const Report& report) {
  std::ostringstream out;
  out << report.command << " (aen-tool " << report.tool_version << ")\n";
  if (report.seed) out << "seed: " << *report.seed << '\n';
  for (const auto& [k, x] : report.inputs.items()) render(out, k, x, 0);
  out << "--\n";
  for (const auto& [k, x] : report.results.items()) render(out, k, x, 0);
  return out.str();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return kInputFile;
  if (dynamic_cast<const ShapeMismatch*>(&e)) return kShapeMismatch;
  if (dynamic_cast<const DimensionLimit*>(&e)) return kDimensionLimit;
  if (dynamic_cast<const NormError*>(&e)) return kNumerical;
  if (dynamic_cast<const NumericalError*>(&e)) return kNumerical;
  if (dynamic_cast<const InvalidArgument*>(&e)) return kUsage;
  return kNumerical;
}

// ---------------------------------------------------------------------------
// Subcommands

namespace {

json cut_json(const Bipartition& cut, const PartyLayout& layout) {
  return {{"cut", cut.describe(layout)}, {"parties", cut.parties()}};
}

json profile_json(const PureState& psi) {
  json rows = json::array();
  for (const auto& [cut, s] : entropy_profile(psi)) {
    auto row = cut_json(cut, psi.layout());
    row["entropy"] = s;
    rows.push_back(row);
  }
  return rows;
}

json layout_json(const PartyLayout& layout) {
  json parties = json::array();
  for (const auto& p : layout.parties()) parties.push_back({{"label", p.label}, {"dim", p.dim}});
  return parties;
}

json rate_json(const RateReport& r, const PureState& source) {
  json cuts = json::array();
  for (const auto& e : r.cuts) {
    auto row = cut_json(e.cut, source.layout());
    row["s_source"] = e.s_source;
    row["s_target"] = e.s_target;
    row["status"] = std::string(to_string(e.status));
    row["ratio"] = e.ratio ? number(*e.ratio) : json(nullptr);
    cuts.push_back(row);
  }
  json degenerate = json::array();
  for (const auto& c : r.degenerate_cuts) degenerate.push_back(c.describe(source.layout()));
  return {{"rate", number(r.rate)},
          {"min_cut", r.min_cut ? json(r.min_cut->describe(source.layout())) : json(nullptr)},
          {"unconstrained", r.unconstrained},
          {"degenerate_cuts", degenerate},
          {"cuts", cuts}};
}

json reversibility_json(const ReversibilityReport& r) {
  return {{"reversible", r.reversible},
          {"max_ratio_spread", number(r.max_ratio_spread)},
          {"zero_cuts_match", r.zero_cuts_match},
          {"tolerance", r.tolerance},
          {"forward_rate", number(r.forward_rate)},
          {"backward_rate", number(r.backward_rate)}};
}

json bound_json(const BoundCheckReport& b) {
  json samples = json::array();
  for (const auto& s : b.per_sample) samples.push_back({{"lhs", s.lhs}, {"rhs", s.rhs}});
  return {{"samples", b.samples},
          {"max_excess", number(b.max_excess)},
          {"passed", b.passed},
          {"per_sample", samples}};
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return 1;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotic entanglement conversion rates under AEN operations", "aen-tool"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string state_a, state_b, out_file;
  double tol = 1e-9;

  auto* entropies = app.add_subcommand("entropies", "Entanglement entropy of every cut");
  entropies->add_option("state", state_a, "State file")->required();

  auto* rate = app.add_subcommand("rate", "AEN conversion rate source -> target");
  rate->add_option("source", state_a, "Source state file")->required();
  rate->add_option("target", state_b, "Target state file")->required();

  auto* reversible = app.add_subcommand("reversible", "Reversibility certificate");
  reversible->add_option("source", state_a, "Source state file")->required();
  reversible->add_option("target", state_b, "Target state file")->required();
  reversible->add_option("--tol", tol, "Relative ratio tolerance")->capture_default_str();

  auto* reg = app.add_subcommand("reg-decompose", "Pairwise REG decomposition of a 3-party state");
  reg->add_option("state", state_a, "State file")->required();
  reg->add_option("--out", out_file, "Write the synthesized state here");

  int prop = 1;
  std::size_t n = 1, samples = 100;
  double r = 0.5;
  std::uint64_t seed_flag = 0;
  auto* bounds = app.add_subcommand("verify-bounds", "Finite-n audit of the protocol bounds");
  bounds->add_option("--prop", prop, "Which bound")->check(CLI::IsMember({1, 3}))->required();
  bounds->add_option("--n", n, "Number of copies")->required();
  bounds->add_option("--r", r, "Rate")->required();
  bounds->add_option("--samples", samples, "Number of samples")->capture_default_str();
  auto* seed_opt = bounds->add_option("--seed", seed_flag, "Seed (default: $AEN_SEED or 1)");

  std::string psi_file, phi_file, input_file;
  auto* simulate = app.add_subcommand("simulate-protocol", "Apply the measure-and-prepare channel");
  simulate->add_option("--psi", psi_file, "Source state file")->required();
  simulate->add_option("--phi", phi_file, "Target state file")->required();
  simulate->add_option("--n", n, "Number of copies")->required();
  simulate->add_option("--r", r, "Rate")->required();
  simulate->add_option("--input", input_file, "Input state file (default: psi^n)");

  std::string name;
  std::size_t parties = 3;
  auto* catalog = app.add_subcommand("catalog", "Emit a named state");
  catalog->add_option("--name", name, "ghz, w, singlet, two_ghz, three_singlets, zero")->required();
  catalog->add_option("--parties", parties, "Party count for ghz, w, zero")->capture_default_str();
  catalog->add_option("--out", out_file, "Write the state file here");

  std::vector<const char*> argv{"aen-tool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Report report;
  try {
    if (entropies->parsed()) {
      const auto psi = parse_state_file(state_a);
      report.command = "entropies";
      report.inputs = {{"state", state_a}};
      report.results = {{"parties", layout_json(psi.layout())}, {"cuts", profile_json(psi)}};
    } else if (rate->parsed()) {
      const auto source = parse_state_file(state_a);
      const auto target = parse_state_file(state_b);
      report.command = "rate";
      report.inputs = {{"source", state_a}, {"target", state_b}};
      report.results = rate_json(aen_rate(source, target, state_a, state_b), source);
      report.results["locc_upper_bound"] = number(locc_upper_bound(source, target));
    } else if (reversible->parsed()) {
      const auto a = parse_state_file(state_a);
      const auto b = parse_state_file(state_b);
      report.command = "reversible";
      report.inputs = {{"source", state_a}, {"target", state_b}, {"tol", tol}};
      report.results = reversibility_json(is_reversible(a, b, tol));
    } else if (reg->parsed()) {
      const auto psi = parse_state_file(state_a);
      const auto d = reg_synthesize(psi);
      report.command = "reg-decompose";
      report.inputs = {{"state", state_a}};
      json spectra = json::array();
      for (const auto& s : d.spectra) spectra.push_back(s.values);
      report.results = {{"s1", d.entropies.s1},
                        {"s2", d.entropies.s2},
                        {"s3", d.entropies.s3},
                        {"spectra", spectra},
                        {"synthesized_layout", layout_json(d.synthesized.layout())},
                        {"input_profile", profile_json(psi)},
                        {"synthesized_profile", profile_json(d.synthesized)},
                        {"reversibility", reversibility_json(verify_reg(psi, d))}};
      if (!out_file.empty()) {
        write_state_file(out_file, d.synthesized);
        report.inputs["out"] = out_file;
      }
    } else if (bounds->parsed()) {
      const std::uint64_t seed = seed_opt->count() > 0 ? seed_flag : default_seed();
      report.command = "verify-bounds";
      report.seed = seed;
      report.inputs = {{"prop", prop}, {"n", n}, {"r", r}, {"samples", samples}};
      const auto check = prop == 1 ? audit_prop1(n, r, samples, seed) : audit_prop3(n, r, samples, seed);
      report.results = bound_json(check);
      if (prop == 1) report.results["rhs"] = std::exp2(-static_cast<double>(n) * (1.0 - r));
    } else if (simulate->parsed()) {
      const auto psi = parse_state_file(psi_file);
      const auto phi = parse_state_file(phi_file);
      const auto ch = build_protocol(psi, phi, n, r);
      const DensityMatrix rho = input_file.empty()
                                    ? DensityMatrix(ch.input_state())
                                    : DensityMatrix(parse_state_file(input_file));
      const auto output = apply_channel(ch, rho);
      const auto reduced = trace_out_flag(ch, output);
      const double flag0 = partial_trace(output, Bipartition{ch.output_layout().size() - 1})
                               .matrix()(0, 0)
                               .real();
      report.command = "simulate-protocol";
      report.inputs = {{"psi", psi_file}, {"phi", phi_file}, {"n", n}, {"r", r},
                       {"input", input_file.empty() ? json(nullptr) : json(input_file)}};
      report.results = {{"output_copies", ch.output_copies()},
                        {"input_layout", layout_json(ch.input_layout())},
                        {"output_layout", layout_json(ch.output_layout())},
                        {"success_probability", success_probability(ch, rho)},
                        {"flag_zero_probability", flag0},
                        {"output_trace", output.matrix().trace().real()},
                        {"fidelity_with_target",
                         fidelity(reduced, DensityMatrix(ch.target_state()))}};
    } else if (catalog->parsed()) {
      const auto which = parse_catalog_name(name);
      if (!which) throw InvalidArgument("unknown catalog state '" + name + "'");
      const auto psi = catalog_state(*which, {parties});
      report.command = "catalog";
      report.inputs = {{"name", name}};
      if (*which == CatalogName::ghz || *which == CatalogName::w || *which == CatalogName::zero) {
        report.inputs["parties"] = parties;
      }
      report.results = {{"layout", layout_json(psi.layout())}};
      if (!out_file.empty()) {
        write_state_file(out_file, psi);
        report.inputs["out"] = out_file;
      } else {
        report.results["state"] = json::parse(format_state_json(psi));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  out << (format == "json" ? format_machine(report) : format_human(report));
  return kOk;
}

}  // namespace aen::cli
