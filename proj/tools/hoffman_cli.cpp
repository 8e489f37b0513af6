// hoffman: command-line front end for the error-bound analyzer.
//
// Exit codes: 0 affirmative verdict, 3 negative verdict, 2 input error,
// 1 internal error. Every command prints one JSON report on stdout.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hoffman/analyzer.hpp"
#include "hoffman/bench.hpp"
#include "hoffman/io.hpp"
#include "hoffman/sampling.hpp"

namespace {

using hoffman::io::json;

constexpr int kYes = 0;
constexpr int kInternal = 1;
constexpr int kInputError = 2;
constexpr int kNo = 3;

struct Outcome {
  json result;
  int exit_code = kYes;
};

struct Command {
  std::string name;
  std::optional<std::string> digest;
};

int emit(const Command& cmd, const json& args, const Outcome& out, double ms) {
  json report{{"command", cmd.name},
              {"args", args},
              {"input_digest", cmd.digest ? json(*cmd.digest) : json(nullptr)},
              {"result", out.result},
              {"timing_ms", ms}};
  std::cout << report.dump(2) << '\n' << std::flush;
  return out.exit_code;
}

hoffman::Level parse_level(const std::string& s) {
  if (s == "pos") return hoffman::Level::Positive;
  if (s == "zero") return hoffman::Level::Zero;
  throw hoffman::io::InputError("--level must be 'pos' or 'zero'");
}

json evaluations_json(const std::vector<hoffman::SetEvaluation>& evs) {
  json arr = json::array();
  for (const auto& ev : evs) {
    arr.push_back({{"set", hoffman::io::index_set_json(ev.set)},
                   {"sign", std::string(hoffman::to_string(ev.value.sign))},
                   {"value_sq", ev.value.value_sq.str()},
                   {"value_approx", ev.value.approx()}});
  }
  return arr;
}

json error_bound_json(const hoffman::ErrorBoundVerdict& v) {
  return {{"has_error_bound", v.has_error_bound},
          {"sigma_sq", v.sigma_sq ? hoffman::io::exact_value_sq(*v.sigma_sq) : json(nullptr)},
          {"certificate", v.certificate ? hoffman::io::certificate_to_json(*v.certificate) : json(nullptr)},
          {"checked_sets", v.checked_sets},
          {"evaluations", evaluations_json(v.evaluations)}};
}

Outcome cmd_check_eb(const hoffman::InequalitySystem& sys, bool full) {
  const auto v = hoffman::check_error_bound(sys, {full});
  return {error_bound_json(v), v.has_error_bound ? kYes : kNo};
}

Outcome cmd_certify(const hoffman::InequalitySystem& sys) {
  const auto v = hoffman::check_error_bound(sys);
  json r{{"has_error_bound", v.has_error_bound},
         {"certificate", v.certificate ? hoffman::io::certificate_to_json(*v.certificate) : json(nullptr)}};
  return {r, v.has_error_bound ? kYes : kNo};
}

Outcome cmd_check_stability(const hoffman::InequalitySystem& sys) {
  const auto v = hoffman::check_stability(sys);
  json r{{"stable", v.stable},
         {"violating_set", v.violating_set ? hoffman::io::index_set_json(*v.violating_set) : json(nullptr)},
         {"lower_bound_sq", v.lower_bound_sq ? hoffman::io::exact_value_sq(*v.lower_bound_sq) : json(nullptr)},
         {"checked_sets", v.checked_sets},
         {"evaluations", evaluations_json(v.evaluations)}};
  return {r, v.stable ? kYes : kNo};
}

Outcome cmd_hoffman(const hoffman::InequalitySystem& sys) {
  const auto h = hoffman::hoffman_exact(sys);
  json r;
  switch (h.kind) {
    case hoffman::HoffmanConstant::Kind::Finite:
      r = {{"kind", "finite"}, {"sigma_sq", hoffman::io::exact_value_sq(h.sigma_sq)}};
      return {r, kYes};
    case hoffman::HoffmanConstant::Kind::Infinite:
      r = {{"kind", "infinite"}, {"sigma_sq", nullptr}};
      return {r, kYes};
    case hoffman::HoffmanConstant::Kind::NoErrorBound:
      r = {{"kind", "no_error_bound"}, {"sigma_sq", nullptr}};
      return {r, kNo};
  }
  return {r, kInternal};
}

Outcome cmd_enumerate(const hoffman::InequalitySystem& sys, hoffman::Level level) {
  const auto fam = hoffman::enumerate(sys, level);
  json sets = json::array();
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    sets.push_back({{"set", hoffman::io::index_set_json(fam.sets[i])},
                    {"witness", hoffman::io::vec_json(fam.witnesses[i])}});
  }
  json r{{"level", level == hoffman::Level::Positive ? "pos" : "zero"},
         {"count", fam.sets.size()},
         {"sets", sets},
         {"maximal", json::array()},
         {"stats",
          {{"realizability_lps", fam.stats.realizability_lps},
           {"consistency_checks", fam.stats.consistency_checks},
           {"pruned", fam.stats.pruned}}}};
  for (const auto& s : hoffman::maximal_sets(fam)) r["maximal"].push_back(hoffman::io::index_set_json(s));
  return {r, kYes};
}

json certificate_payload(const json& j) {
  if (j.contains("result") && j["result"].is_object() && j["result"].contains("certificate")) {
    return j["result"]["certificate"];
  }
  if (j.contains("certificate")) return j["certificate"];
  return j;
}

Outcome cmd_verify_cert(const hoffman::InequalitySystem& sys, const std::string& cert_path) {
  const json payload = certificate_payload(hoffman::io::load_json(cert_path));
  if (payload.is_null()) throw hoffman::io::InputError("no certificate in " + cert_path);
  bool valid = false;
  try {
    valid = hoffman::verify_certificate(sys, hoffman::io::certificate_from_json(payload));
  } catch (const hoffman::io::InputError&) {
    throw;
  } catch (const std::invalid_argument&) {
    valid = false;  // well-formed JSON, structurally wrong certificate
  }
  return {json{{"valid", valid}}, valid ? kYes : kNo};
}

Outcome cmd_perturb(const hoffman::InequalitySystem& sys, const std::string& eps, const std::string& u,
                    const std::string& xbar, const std::string& out_path) {
  hoffman::Perturbation p;
  try {
    p.epsilon = hoffman::Scalar::parse(eps);
  } catch (const std::exception& e) {
    throw hoffman::io::InputError(std::string("--eps: ") + e.what());
  }
  p.u = hoffman::io::parse_csv_vec(u);
  p.x_bar = hoffman::io::parse_csv_vec(xbar);
  hoffman::InequalitySystem perturbed = [&] {
    try {
      return hoffman::perturb(sys, p);
    } catch (const std::invalid_argument& e) {
      throw hoffman::io::InputError(e.what());
    }
  }();
  const json file = hoffman::io::system_to_json(perturbed);
  hoffman::io::write_atomically(out_path, file.dump(2) + "\n");
  return {json{{"out", out_path}, {"output_digest", hoffman::io::system_digest(perturbed)}, {"system", file}},
          kYes};
}

Outcome cmd_estimate(const hoffman::InequalitySystem& sys, const hoffman::SampleConfig& cfg) {
  hoffman::SigmaEstimate est;
  try {
    est = hoffman::estimate_sigma(sys, cfg);
  } catch (const std::invalid_argument& e) {
    throw hoffman::io::InputError(e.what());
  }
  json r{{"sigma_estimate", est.sigma ? json(*est.sigma) : json(nullptr)},
         {"infeasible_samples", est.infeasible_samples},
         {"samples", cfg.sample_count},
         {"seed", cfg.seed},
         {"box", cfg.box_radius}};
  return {r, kYes};
}

Outcome cmd_bench(const std::string& range, hoffman::Level level) {
  const auto dots = range.find("..");
  if (dots == std::string::npos) throw hoffman::io::InputError("--m-range must look like A..B");
  std::size_t lo = 0, hi = 0;
  try {
    lo = std::stoul(range.substr(0, dots));
    hi = std::stoul(range.substr(dots + 2));
  } catch (const std::exception&) {
    throw hoffman::io::InputError("--m-range must look like A..B");
  }
  if (lo == 0 || lo > hi || hi > hoffman::kMaxEnumerableRows) {
    throw hoffman::io::InputError("--m-range needs 1 <= A <= B <= " + std::to_string(hoffman::kMaxEnumerableRows));
  }
  const auto rows = hoffman::run_bench(lo, hi, level);
  json table = json::array();
  bool all_match = true;
  for (const auto& r : rows) {
    all_match = all_match && r.family_size == r.expected;
    table.push_back({{"m", r.m},
                     {"family_size", r.family_size},
                     {"expected", r.expected},
                     {"time_ms", r.seconds * 1e3},
                     {"repeats", r.repeats}});
  }
  const auto growth = hoffman::analyze_growth(rows);
  json segs = json::array();
  for (const auto& s : growth.segments) {
    segs.push_back({{"m_first", s.m_first}, {"m_last", s.m_last}, {"loglog_slope", s.loglog_slope}});
  }
  json r{{"level", level == hoffman::Level::Positive ? "pos" : "zero"},
         {"table", table},
         {"counts_match", all_match},
         {"growth", {{"segments", segs}, {"superpolynomial", growth.superpolynomial}}}};
  return {r, all_match ? kYes : kNo};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact error-bound, stability and Hoffman-constant analyzer for A x <= b"};
  app.require_subcommand(1);

  std::string file, cert_path, level = "pos", eps, u, xbar, out_path, range;
  bool full = false;
  hoffman::SampleConfig cfg;

  auto* check_eb = app.add_subcommand("check-eb", "Decide whether the system admits an error bound");
  check_eb->add_option("FILE", file, "system file")->required();
  check_eb->add_flag("--full", full, "evaluate every realizable set, not only maximal ones");

  auto* stability = app.add_subcommand("check-stability", "Decide stability under linear perturbations");
  stability->add_option("FILE", file, "system file")->required();

  auto* hoff = app.add_subcommand("hoffman", "Exact squared Hoffman constant");
  hoff->add_option("FILE", file, "system file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate realizable active sets");
  enumerate->add_option("FILE", file, "system file")->required();
  enumerate->add_option("--level", level, "pos | zero")->required();

  auto* certify = app.add_subcommand("certify", "Emit a no-error-bound certificate if one exists");
  certify->add_option("FILE", file, "system file")->required();

  auto* verify = app.add_subcommand("verify-cert", "Check a certificate by substitution");
  verify->add_option("FILE", file, "system file")->required();
  verify->add_option("CERT", cert_path, "certificate or report file")->required();

  auto* perturb = app.add_subcommand("perturb", "Write an epsilon-linear perturbation of the system");
  perturb->add_option("FILE", file, "system file")->required();
  perturb->add_option("--eps", eps, "epsilon as a rational")->required();
  perturb->add_option("--u", u, "direction, comma separated")->required();
  perturb->add_option("--xbar", xbar, "boundary point, comma separated")->required();
  perturb->add_option("--out", out_path, "output system file")->required();

  auto* estimate = app.add_subcommand("estimate", "Sampling estimate of the Hoffman constant");
  estimate->add_option("FILE", file, "system file")->required();
  estimate->add_option("--samples", cfg.sample_count, "number of sampled points")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", cfg.seed, "generator seed");
  estimate->add_option("--box", cfg.box_radius, "sampling box half-width")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Time enumeration on identity worst cases");
  bench->add_option("--m-range", range, "A..B")->required();
  bench->add_option("--level", level, "pos | zero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    Command cmd{app.get_subcommands().front()->get_name(), std::nullopt};
    json args = json::object();
    if (cmd.name == "bench") {
      args = {{"m_range", range}, {"level", level}};
      const Outcome out = cmd_bench(range, parse_level(level));
      return emit(cmd, args, out, elapsed_ms());
    }

    const hoffman::InequalitySystem sys = hoffman::io::load_system(file);
    cmd.digest = hoffman::io::system_digest(sys);
    args["file"] = file;
    Outcome out;
    if (cmd.name == "check-eb") {
      args["full"] = full;
      out = cmd_check_eb(sys, full);
    } else if (cmd.name == "check-stability") {
      out = cmd_check_stability(sys);
    } else if (cmd.name == "hoffman") {
      out = cmd_hoffman(sys);
    } else if (cmd.name == "enumerate") {
      args["level"] = level;
      out = cmd_enumerate(sys, parse_level(level));
    } else if (cmd.name == "certify") {
      out = cmd_certify(sys);
    } else if (cmd.name == "verify-cert") {
      args["cert"] = cert_path;
      out = cmd_verify_cert(sys, cert_path);
    } else if (cmd.name == "perturb") {
      args.update({{"eps", eps}, {"u", u}, {"xbar", xbar}, {"out", out_path}});
      out = cmd_perturb(sys, eps, u, xbar, out_path);
    } else if (cmd.name == "estimate") {
      args.update({{"samples", cfg.sample_count}, {"seed", cfg.seed}, {"box", cfg.box_radius}});
      out = cmd_estimate(sys, cfg);
    }
    return emit(cmd, args, out, elapsed_ms());
  } catch (const hoffman::io::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
