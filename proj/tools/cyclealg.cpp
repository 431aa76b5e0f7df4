// cyclealg: invariants, comparisons and verification harnesses for towers of
// 2m-cycle algebras. Exit status 0 on success, 3 on a negative verdict or a
// failed assertion, 2 on errors and refusals.

#include <CLI11.hpp>
#include <iostream>

#include "cyclealg/report.hpp"

namespace {

using cyclealg::CommandReport;
using nlohmann::json;

int emit(const CommandReport& rep, bool as_json) {
  if (as_json) {
    std::cout << rep.record.dump(2) << "\n";
  } else if (rep.exit_code == cyclealg::kExitError) {
    std::cerr << rep.text;
  } else {
    std::cout << rep.text;
  }
  return rep.exit_code;
}

std::string error_kind(const cyclealg::Error& e) {
  if (dynamic_cast<const cyclealg::SpecValidationError*>(&e)) return "validation";
  if (dynamic_cast<const cyclealg::InvalidIndexError*>(&e)) return "invalid_index";
  if (dynamic_cast<const cyclealg::IncompatibleError*>(&e)) return "incompatible";
  if (dynamic_cast<const cyclealg::CapacityError*>(&e)) return "capacity";
  if (dynamic_cast<const cyclealg::OverflowError*>(&e)) return "overflow";
  if (dynamic_cast<const cyclealg::InvalidTowerError*>(&e)) return "invalid_tower";
  if (dynamic_cast<const cyclealg::NotRealizableError*>(&e)) return "not_realizable";
  return "invalid_input";
}

cyclealg::Signature parse_signature(const std::string& text) {
  return cyclealg::Signature::from_entries(cyclealg::parse_int_list(text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and verification harnesses for towers of 2m-cycle algebras", "cyclealg"};
  app.set_version_flag("--version", cyclealg::kToolVersion);
  app.require_subcommand(1);

  bool as_json = false;
  std::string command;
  json input;
  std::function<CommandReport()> run;

  // invariants
  std::string inv_path;
  int levels = 0;
  auto* inv = app.add_subcommand("invariants", "Limit invariants of a tower spec (JSON file)");
  inv->add_option("path", inv_path, "Tower spec file")->required();
  inv->add_option("--levels", levels, "Also report this many finite levels of a stationary tower (0..12)");
  inv->add_flag("--json", as_json, "Structured output");
  inv->callback([&] {
    command = "invariants";
    input = {{"path", inv_path}, {"levels", levels}};
    run = [&] { return cyclealg::invariants_report(cyclealg::load_tower_spec(inv_path), inv_path, levels); };
  });

  // compare
  std::string path_a;
  std::string path_b;
  auto* cmp = app.add_subcommand("compare", "Decide isomorphism of two stationary towers");
  cmp->add_option("first", path_a, "Tower spec file")->required();
  cmp->add_option("second", path_b, "Tower spec file")->required();
  cmp->add_flag("--json", as_json, "Structured output");
  cmp->callback([&] {
    command = "compare";
    input = {{"paths", {path_a, path_b}}};
    run = [&] {
      return cyclealg::compare_report(cyclealg::load_tower_spec(path_a), cyclealg::load_tower_spec(path_b), path_a,
                                      path_b);
    };
  });

  // signature
  auto* sig = app.add_subcommand("signature", "Exact signature operations");
  sig->require_subcommand(1);
  std::string inner;
  std::string outer;
  auto* compose = sig->add_subcommand("compose", "Signature of outer o inner");
  compose->add_option("inner", inner, "Signature applied first, e.g. 1,0,0,0,0,0")->required();
  compose->add_option("outer", outer, "Signature applied second")->required();
  compose->add_flag("--json", as_json, "Structured output");
  compose->callback([&] {
    command = "signature compose";
    input = {{"inner", inner}, {"outer", outer}};
    run = [&] { return cyclealg::signature_compose_report(parse_signature(inner), parse_signature(outer)); };
  });
  std::string range_sig;
  auto* homrange = sig->add_subcommand("homrange", "Homology range of a signature");
  homrange->add_option("signature", range_sig, "Signature, e.g. 1,1,1,1,1,1")->required();
  homrange->add_flag("--json", as_json, "Structured output");
  homrange->callback([&] {
    command = "signature homrange";
    input = {{"signature", range_sig}};
    run = [&] { return cyclealg::homrange_report(parse_signature(range_sig)); };
  });
  std::string k0_text;
  std::int64_t h_value = 0;
  auto* from = sig->add_subcommand("fromk0h1", "Signature with a given K0 matrix and H1 value");
  from->add_option("--k0", k0_text, "K0 matrix, rows separated by ';' or a JSON array of rows")->required();
  from->add_option("--h1", h_value, "H1 value")->required();
  from->add_flag("--json", as_json, "Structured output");
  from->callback([&] {
    command = "signature fromk0h1";
    input = {{"k0", k0_text}, {"h", h_value}};
    run = [&] {
      return cyclealg::fromk0h1_report(cyclealg::K0Matrix::from_rows(cyclealg::parse_int_matrix(k0_text)), h_value);
    };
  });

  // verify
  cyclealg::VerifyOptions vo;
  std::string dims_text;
  std::string deltas_text;
  auto* ver = app.add_subcommand("verify", "Run a verification harness");
  ver->add_option("target", vo.target, "lemma22 | lemma31 | example23 | composition-oracle | lemma42-roundtrip")
      ->required()
      ->check(CLI::IsMember({"lemma22", "lemma31", "example23", "composition-oracle", "lemma42-roundtrip"}));
  ver->add_option("--m", vo.m, "Cycle index (2m vertices)")->capture_default_str();
  ver->add_option("--dims", dims_text, "Vertex multiplicities: one value for all vertices, or 2m values");
  ver->add_option("--trials", vo.trials, "Number of random trials")->capture_default_str();
  ver->add_option("--tol", vo.tol, "Tolerance for exact constructions")->capture_default_str();
  ver->add_option("--seed", vo.seed, "Random seed")->capture_default_str();
  ver->add_option("--epsilon", vo.epsilon, "Entry tolerance recorded by lemma31")->capture_default_str();
  ver->add_option("--deltas", deltas_text, "Perturbation sizes for lemma31, comma separated");
  ver->add_option("--bound", vo.bound, "Largest signature entry for lemma42-roundtrip")->capture_default_str();
  ver->add_flag("--json", as_json, "Structured output");
  ver->callback([&] {
    command = "verify " + vo.target;
    input = {{"target", vo.target}, {"m", vo.m}, {"dims", dims_text}, {"deltas", deltas_text}};
    run = [&] {
      if (!dims_text.empty()) vo.dims = cyclealg::parse_int_list(dims_text);
      if (!deltas_text.empty()) vo.deltas = cyclealg::parse_double_list(deltas_text);
      return cyclealg::verify_report(vo);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cyclealg::kExitError;
  }

  try {
    return emit(run(), as_json);
  } catch (const cyclealg::Error& e) {
    return emit(cyclealg::error_report(command, input, error_kind(e), e.what()), as_json);
  } catch (const std::exception& e) {
    return emit(cyclealg::error_report(command, input, "internal", e.what()), as_json);
  }
}
