#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "templikit/constructors/constructors.hpp"
#include "templikit/errors.hpp"
#include "templikit/io/io.hpp"

using namespace templikit;
using coeff::Ring;
using coeff::Scalar;
using io::json;
using kan::CheckReport;
using kan::Verdict;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;
constexpr int kHypothesis = 3;
constexpr int kUsage = 64;

struct Output {
  std::string format;
  std::string command;
  json reports = json::array();
  std::ostringstream text;

  void add(const CheckReport& r) {
    reports.push_back(io::to_json(r));
    text << r.to_string();
  }
  void add(const templicial::ValidationReport& r, const std::string& what) {
    json j = io::to_json(r);
    j["property"] = what;
    reports.push_back(std::move(j));
    text << what << ": " << (r.passed() ? "pass" : "fail") << "\n";
    if (!r.passed()) text << r.to_string();
  }
  int finish(int code, const std::string& verdict) {
    if (format == "json") {
      json j;
      j["format_version"] = io::kFormatVersion;
      j["command"] = command;
      j["verdict"] = verdict;
      j["exit_code"] = std::to_string(code);
      j["reports"] = reports;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text.str() << "verdict: " << verdict << "\n";
    }
    return code;
  }
  int error(const std::string& message) {
    if (format == "json") {
      json j;
      j["format_version"] = io::kFormatVersion;
      j["command"] = command;
      j["verdict"] = "invalid input";
      j["exit_code"] = std::to_string(kInvalid);
      j["error"] = message;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << message << "\n";
    }
    return kInvalid;
  }
};

int default_level(int requested, int truncation) { return requested > 0 ? requested : std::min(4, truncation); }

/// Validation of the instance and, when present, its fiber and deformation.
bool validate_instance(const io::Instance& inst, Output& out, int N) {
  auto r = templicial::validate_templicial(inst.module);
  out.add(r, "validation");
  bool ok = r.passed();
  if (inst.deformation) {
    auto f = templicial::validate_templicial(inst.deformation->fiber);
    out.add(f, "fiber validation");
    ok = ok && f.passed();
    if (ok) {
      auto d = deform::validate_deformation(inst.pair(), N);
      out.add(d);
      ok = d.passed();
    }
  }
  return ok;
}

io::Instance example(const std::string& name, int N) {
  using namespace constructors;
  if (name == "paper_P_deformed") {
    auto pair = deform::DeformationPair{coeff::RingExtension(Ring::dual_chain(2, 2), Ring::prime_field(2)),
                                        builtin_paper_P_deformed(2, N), builtin_paper_P(Ring::prime_field(2), N),
                                        std::nullopt};
    return {pair.deformed, io::Instance::Deformation{pair.theta.to_string(), pair.special_fiber}};
  }
  if (name == "nerve_F3_deformed") {
    const Ring R = Ring::dual_chain(3, 2), k = Ring::prime_field(3);
    auto deformed = nerve(LinearCategory::algebra(R, {R.neg(R.uniformizer_power(1)), Scalar(0), Scalar(1)}), N);
    auto fiber = nerve(LinearCategory::algebra(k, {Scalar(0), Scalar(0), Scalar(1)}), N);
    return {deformed, io::Instance::Deformation{coeff::RingExtension(R, k).to_string(), fiber}};
  }
  return {builtin(name, N), std::nullopt};
}

std::vector<std::string> example_names() {
  auto names = constructors::builtin_names();
  names.push_back("nerve_F3_deformed");
  return names;
}

coeff::Module parse_module_spec(const Ring& R, const std::string& spec) {
  std::vector<Scalar> ann;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) ann.push_back(R.parse_element(part));
  if (ann.empty()) throw ValidationError("empty module specification");
  return coeff::Module(R, std::move(ann));
}

const char* verdict_text(int code) {
  switch (code) {
    case kPass:
      return "pass";
    case kFail:
      return "fail";
    case kHypothesis:
      return "hypothesis failure";
    default:
      return "invalid input";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"templikit: templicial modules, Kan conditions and deformations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string file, property, to, out_path, name, theorem, module_spec;
  int max_level = 0;
  int module_rank = 1;

  auto* validate = app.add_subcommand("validate", "Validate an instance file");
  validate->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "Check a property of an instance");
  check->add_option("file", file)->required();
  check->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"kan", "wings", "degproj", "levelwise-flat", "ez"}));
  check->add_option("--max-level", max_level)->check(CLI::Range(1, 12));

  auto* basechange = app.add_subcommand("basechange", "Base change an instance along R -> k");
  basechange->add_option("file", file)->required();
  basechange->add_option("--to", to, "Target ring, such as F2 or Z/4")->required();
  basechange->add_option("-o", out_path)->required();

  auto* ex = app.add_subcommand("example", "Write a built-in example");
  ex->add_option("name", name)->required()->check(CLI::IsMember(example_names()));
  ex->add_option("-o", out_path)->required();
  ex->add_option("--max-level", max_level)->check(CLI::Range(1, 6));

  auto* verify = app.add_subcommand("verify", "Run a theorem harness");
  verify->add_option("file", file)->required();
  verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"main", "degproj-lift", "wings-tensor"}));
  auto* rank_opt = verify->add_option("--module-rank", module_rank)->check(CLI::Range(1, 16));
  verify->add_option("--module", module_spec, "Comma separated annihilators, such as 2 or 0,0")->excludes(rank_opt);
  verify->add_option("--max-level", max_level)->check(CLI::Range(1, 12));

  auto* report = app.add_subcommand("report", "Run every check on an instance");
  report->add_option("file", file)->required();
  report->add_option("--max-level", max_level)->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Output out{format, app.get_subcommands().front()->get_name(), json::array(), {}};
  try {
    if (*ex) {
      const int N = max_level > 0 ? max_level : 4;
      io::write_file(out_path, example(name, N));
      out.text << "wrote " << name << " to " << out_path << "\n";
      return out.finish(kPass, "pass");
    }
    const io::Instance inst = io::read_file(file);
    const auto& X = inst.module;
    const int N = default_level(max_level, X.max_level());
    if (N > X.max_level()) throw RangeError("max-level exceeds the truncation of the file");
    const bool valid = validate_instance(inst, out, std::min(N, inst.deformation ? inst.deformation->fiber.max_level() : N));

    if (*validate) return out.finish(valid ? kPass : kInvalid, valid ? "pass" : "invalid input");
    if (!valid) return out.finish(kInvalid, "invalid input");

    if (*basechange) {
      coeff::RingExtension theta(X.ring(), Ring::parse(to));
      io::write_file(out_path, io::Instance{deform::base_change_templicial(theta, X), std::nullopt});
      out.text << "wrote " << theta.to_string() << " base change to " << out_path << "\n";
      return out.finish(kPass, "pass");
    }
    if (*check) {
      CheckReport r;
      if (property == "kan") r = kan::check_quasicategory(X, N, false);
      if (property == "wings") r = kan::check_lifts_wings(X, N, false);
      if (property == "degproj") r = kan::check_deg_projective(X, N, false);
      if (property == "levelwise-flat") r = kan::check_levelwise(X, kan::Levelwise::Flat, N);
      if (property == "ez") r = kan::ez_check(X, N, false);
      out.add(r);
      const int code = r.passed() ? kPass : kFail;
      return out.finish(code, verdict_text(code));
    }
    if (*verify) {
      CheckReport r;
      if (theorem == "wings-tensor") {
        auto M = module_spec.empty() ? coeff::Module::free(X.ring(), static_cast<std::size_t>(module_rank))
                                     : parse_module_spec(X.ring(), module_spec);
        r = deform::verify_wings_tensor(X, M, N);
      } else {
        if (!inst.deformation) throw ValidationError("theorem '" + theorem + "' needs a deformation block");
        r = theorem == "main" ? deform::verify_thm_main(inst.pair(), N) : deform::verify_degproj_lift(inst.pair(), N);
      }
      out.add(r);
      const int code = r.verdict == Verdict::Pass ? kPass : r.verdict == Verdict::HypothesisFailure ? kHypothesis : kFail;
      return out.finish(code, verdict_text(code));
    }
    if (*report) {
      bool all = true;
      auto run = [&](const CheckReport& r) {
        out.add(r);
        all = all && (r.passed() || r.verdict == Verdict::NotApplicable);
      };
      run(kan::check_levelwise(X, kan::Levelwise::Flat, N));
      if (N >= 2) {
        run(kan::check_quasicategory(X, N, false));
        run(kan::check_lifts_wings(X, N, false));
      }
      run(kan::check_deg_projective(X, N, false));
      run(kan::ez_check(X, N, false));
      const int code = all ? kPass : kFail;
      return out.finish(code, verdict_text(code));
    }
  } catch (const Error& e) {
    return out.error(e.what());
  }
  return kUsage;
}
