#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fstream>
#include <ostream>

#include "demo.hpp"
#include "simpfib/check.hpp"
#include "simpfib/fibration.hpp"
#include "simpfib/homology.hpp"
#include "simpfib/spec_io.hpp"
#include "simpfib/twisting.hpp"

namespace simpfib {

namespace {

struct Common {
  int max_dim = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::string format = "text";
  unsigned jobs = 0;
  std::string out_path;
};

void add_common(CLI::App& app, Common& c) {
  app.add_option("--max-dim", c.max_dim, "highest dimension checked")
      ->check(CLI::Range(1, 8));
  app.add_option("--seed", c.seed, "seed for sampled loop words");
  app.add_option("--samples", c.samples, "number of random loop words");
  app.add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", c.jobs,
                 "worker threads, 0 for all cores (SIMPFIB_JOBS overrides)");
  app.add_option("--out", c.out_path, "write the report to this file");
}

/// Writes `text` to --out or to `out`.
void emit(Common const& c, std::string const& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path);
  if (!file) {
    throw SpecError(fmt::format("cannot write {}", c.out_path));
  }
  file << text;
}

int finish(Common const& c, Report const& report, std::ostream& out) {
  emit(c,
       c.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text(),
       out);
  return report.passed() ? kExitPass : kExitFail;
}

SesSpec load_ses_with_section(std::string const& path,
                              std::string const& section_path, int cutoff) {
  auto spec = read_json_file(path);
  if (!section_path.empty()) {
    spec["section"] = read_json_file(section_path);
  }
  auto ses = parse_ses(spec, cutoff);
  if (!spec.contains("name")) {
    ses.name = std::filesystem::path(path).stem().string();
  }
  return ses;
}

int verify_ses(Common const& c, std::string const& ses_path,
               std::string const& section_path, std::ostream& out) {
  auto spec = load_ses_with_section(ses_path, section_path, c.max_dim);
  Fibration fibration(spec.ses, spec.section, c.max_dim);
  VerifyOptions options;
  options.max_dim = c.max_dim;
  options.samples = c.samples;
  options.seed = c.seed;
  auto report = verify_theorem(fibration, options);
  report.config()["ses"] = spec.name;
  return finish(c, report, out);
}

/// A deterministic simplex to corrupt: the last 2-simplex, or the last
/// simplex of the top dimension when that is lower.
std::pair<int, Index> fault_site(SimplicialSet const& space, int max_dim) {
  int const n = std::min(2, max_dim);
  return {n, space.count(n) - 1};
}

int verify_twist(Common const& c, std::string const& group_arg,
                 std::string const& which, std::string const& fault,
                 std::ostream& out) {
  auto group = load_group(group_arg);
  int const top = c.max_dim;
  auto simplicial = SimplicialGroup::constant(group, top);
  SpacePtr base = make_bar(simplicial, top);
  auto const bar = std::static_pointer_cast<const BarConstruction>(base);

  Report report("verify-twist");
  report.config()["group"] = group_arg;
  report.config()["which"] = which;
  report.config()["max_dim"] = top;
  if (!fault.empty()) {
    report.config()["fault"] = fault;
  }

  if (!fault.empty() && top < 2) {
    throw CLI::ValidationError("verify-twist", "--inject-fault needs --max-dim >= 2");
  }
  auto const [fault_dim, fault_simplex] = fault_site(*base, top);
  if (fault == "face") {
    TabulatedSet table(*base);
    auto const original = table.face(1, fault_dim, fault_simplex);
    auto const wrong = (original + 1) % table.count(fault_dim - 1);
    base = std::make_shared<const TabulatedSet>(
        table.with_face(1, fault_dim, fault_simplex, wrong));
  }
  for (auto r : check_simplicial_identities(*base, top)) {
    r.name = "space." + r.name;
    report.add(std::move(r));
  }
  bool const corrupt_twist = fault == "twist";

  if (which == "canonical") {
    FiniteCarrier carrier(simplicial);
    auto const& g0 = group->identity();
    Elem const shift = g0 == 0 && group->order() > 1 ? 1 : 0;
    TwistFn<FiniteCarrier> tau = [&](int n, Index b) {
      auto value = bar->twist(bar->unrank(n, b));
      if (corrupt_twist && n == fault_dim && b == fault_simplex) {
        value = carrier.multiply(n - 1, value, shift);
      }
      return value;
    };
    for (auto r : validate_twisting(*base, carrier, tau, top)) {
      r.name = "twisting." + r.name;
      report.add(std::move(r));
    }
  } else {
    auto loops = std::make_shared<const LoopGroup>(base);
    LoopCarrier carrier(loops);
    auto const generators = loops->free_generators(fault_dim - 1);
    TwistFn<LoopCarrier> tau = [&](int n, Index b) {
      auto value = loops->twist(n, b);
      if (corrupt_twist && n == fault_dim && b == fault_simplex &&
          !generators.empty()) {
        value = loops->multiply(value,
                                loops->generator(n - 1, generators.front()));
      }
      return value;
    };
    for (auto r : validate_twisting(*base, carrier, tau, top)) {
      r.name = "twisting." + r.name;
      report.add(std::move(r));
    }
  }
  return finish(c, report, out);
}

int homology_command(Common const& c, std::string const& ses_path,
                     std::string const& group_arg, std::string const& space,
                     std::ostream& out) {
  if (ses_path.empty() == group_arg.empty()) {
    throw CLI::ValidationError("homology", "give exactly one of --ses, --group");
  }
  SpacePtr target;
  std::string label;
  if (!group_arg.empty()) {
    if (space != "bar") {
      throw CLI::ValidationError("homology",
                                 "--space twisted needs a sequence (--ses)");
    }
    target = make_bar(SimplicialGroup::constant(load_group(group_arg), c.max_dim),
                      c.max_dim);
    label = group_arg;
  } else {
    auto spec = load_ses(ses_path, c.max_dim);
    Fibration f(spec.ses, spec.section, c.max_dim);
    if (space == "bar") {
      target = f.bar_g();
    } else {
      target = f.loop_product();
    }
    label = spec.name;
  }
  auto chains = normalized_chains(*target, c.max_dim);
  auto groups = homology(chains);

  Report report("homology");
  report.config()["input"] = label;
  report.config()["space"] = space;
  report.config()["max_dim"] = c.max_dim;
  nlohmann::json values = nlohmann::json::array();
  for (auto const& h : groups) {
    nlohmann::json torsion = nlohmann::json::array();
    for (auto const& t : h.torsion) {
      torsion.push_back(t.get_str());
    }
    values.push_back({{"degree", h.degree},
                      {"betti", h.betti},
                      {"torsion", torsion},
                      {"group", h.format()}});
  }
  report.config()["homology"] = values;
  report.add(make_record("boundary-squared-zero", -1, true, chains.top));

  if (c.format == "json") {
    return finish(c, report, out);
  }
  std::string text =
      fmt::format("homology of {} ({}), chains up to dimension {}\n", label,
                  space, c.max_dim);
  for (auto const& h : groups) {
    text += fmt::format("H_{} = {}\n", h.degree, h.format());
  }
  emit(c, text, out);
  return kExitPass;
}

int demo_command(Common const& c, std::string const& example, int dim,
                 bool list, std::ostream& out) {
  if (list) {
    std::string text;
    for (auto const& e : demo_examples()) {
      text += fmt::format("{}  {}\n", e.name, e.summary);
    }
    emit(c, text, out);
    return kExitPass;
  }
  try {
    emit(c, demo_text(example, dim), out);
  } catch (std::invalid_argument const& e) {
    throw CLI::ValidationError("demo", e.what());
  }
  return kExitPass;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app("Exhaustive checks for classifying spaces of simplicial group "
               "extensions",
               "simpfib");
  app.require_subcommand(1);
  Common common;

  auto* ses_cmd = app.add_subcommand(
      "verify-ses", "check BG = BK x_tau BL for a short exact sequence");
  std::string ses_path, section_path;
  ses_cmd->add_option("--ses", ses_path, "sequence spec file")->required();
  ses_cmd->add_option("--section", section_path, "section table file");
  add_common(*ses_cmd, common);

  auto* twist_cmd = app.add_subcommand(
      "verify-twist", "check the twisting-function axioms");
  std::string group_arg, which = "canonical", fault;
  twist_cmd->add_option("--group", group_arg, "group shorthand or spec file")
      ->required();
  twist_cmd->add_option("--which", which, "canonical (tau_G) or loop (tau^X)")
      ->check(CLI::IsMember({"canonical", "loop"}));
  twist_cmd->add_option("--inject-fault", fault,
                        "corrupt one face or one twisting value")
      ->check(CLI::IsMember({"face", "twist"}));
  add_common(*twist_cmd, common);

  auto* homology_cmd =
      app.add_subcommand("homology", "integral homology of BG or BK x_tau BL");
  std::string h_ses, h_group, space = "bar";
  homology_cmd->add_option("--ses", h_ses, "sequence spec file");
  homology_cmd->add_option("--group", h_group, "group shorthand or spec file");
  homology_cmd->add_option("--space", space, "bar or twisted")
      ->check(CLI::IsMember({"bar", "twisted"}));
  add_common(*homology_cmd, common);

  auto* demo_cmd = app.add_subcommand("demo", "worked low-dimensional examples");
  std::string example = "z4";
  int demo_dim = 2;
  bool list = false;
  demo_cmd->add_option("--example", example, "bundled example name");
  demo_cmd->add_option("--dim", demo_dim, "simplex dimension");
  demo_cmd->add_flag("--list", list, "list the bundled examples");
  add_common(*demo_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitPass;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  set_default_jobs(common.jobs);
  try {
    if (ses_cmd->parsed()) {
      return verify_ses(common, ses_path, section_path, out);
    }
    if (twist_cmd->parsed()) {
      return verify_twist(common, group_arg, which, fault, out);
    }
    if (homology_cmd->parsed()) {
      return homology_command(common, h_ses, h_group, space, out);
    }
    return demo_command(common, example, demo_dim, list, out);
  } catch (CLI::ValidationError const& e) {
    err << "error: " << e.what() << "\n";
  } catch (SpecError const& e) {
    err << "spec error: " << e.what() << "\n";
  } catch (GroupError const& e) {
    err << "group error: " << e.what() << "\n";
  } catch (SimplicialError const& e) {
    err << "error: " << e.what() << "\n";
  } catch (FibrationError const& e) {
    err << "error: " << e.what() << "\n";
  } catch (HomologyError const& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace simpfib
