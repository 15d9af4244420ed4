// Command-line front end for the LTL -> VWAA -> TGBA -> BA translation.

#include "ltl2buchi/families.hpp"
#include "ltl2buchi/pipeline.hpp"
#include "ltl2buchi/random_formula.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ltl2buchi;

namespace {

struct TranslateArgs {
  std::string formula;
  std::string file;
  std::string mode = "improved";
  std::string vwaa_simplify = "general";
  std::string ba_merge = "selfloop";
  std::string format = "never";
  std::string stage = "ba";
  bool no_reduce = false;
  bool no_suspend = false;
  bool no_gf_fastpath = false;
  bool no_temporal_progress = false;
  bool show_stats = false;
  std::vector<std::string> disabled_rules;
};

PipelineConfig to_config(const TranslateArgs& a) {
  PipelineConfig cfg;
  cfg.reduce_formula = !a.no_reduce;
  for (const std::string& r : a.disabled_rules) {
    if (r == "constant-folds") cfg.rules.constant_folds = false;
    else if (r == "alternating-collapse") cfg.rules.alternating_collapse = false;
    else if (r == "class-collapse") cfg.rules.class_collapse = false;
    else if (r == "until-absorption") cfg.rules.until_absorption = false;
    else if (r == "x-factoring") cfg.rules.x_factoring = false;
    else if (r == "conditional") cfg.rules.conditional = false;
    else throw std::invalid_argument("unknown rule group: " + r);
  }
  cfg.mode = a.mode == "original" ? VwaaMode::Original : VwaaMode::Improved;
  cfg.vwaa_simplify = a.vwaa_simplify == "off"     ? VwaaSimplify::Off
                      : a.vwaa_simplify == "basic" ? VwaaSimplify::Basic
                                                   : VwaaSimplify::General;
  cfg.tgba_suspend = !a.no_suspend;
  cfg.temporal_progress_restriction = !a.no_temporal_progress;
  cfg.gf_fastpath = !a.no_gf_fastpath;
  cfg.ba_merge = a.ba_merge == "basic" ? BaMerge::Basic : BaMerge::SelfLoop;
  cfg.format = a.format == "hoa" ? OutFormat::Hoa
               : a.format == "dot" ? OutFormat::Dot
                                   : OutFormat::Never;
  cfg.stage = a.stage == "vwaa"   ? Stage::VwaaStage
              : a.stage == "tgba" ? Stage::TgbaStage
                                  : Stage::BaStage;
  cfg.want_stats = a.show_stats;
  return cfg;
}

int run_translate(const TranslateArgs& args) {
  std::string text = args.formula;
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) {
      std::cerr << "error: cannot open " << args.file << '\n';
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) {
    std::cerr << "error: no formula given (use -f or -F)\n";
    return 1;
  }
  PipelineConfig cfg = to_config(args);
  Translation t = translate(text, cfg);
  std::cout << render(t, cfg);
  if (cfg.want_stats && cfg.stage == Stage::BaStage)
    std::cerr << "stats: states=" << t.ba_stats.states
              << " transitions=" << t.ba_stats.transitions
              << " deterministic=" << (t.ba_stats.deterministic ? "yes" : "no") << '\n';
  return 0;
}

GenConfig load_weights(GenConfig cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open weights file " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, eq;
    uint32_t value;
    if (!(ls >> key))
      continue;
    if (key.empty() || key[0] == '#')
      continue;
    if (!(ls >> eq >> value) || eq != "=")
      throw std::invalid_argument("bad weights line: " + line);
    if (key == "PropositionPriority") cfg.proposition_priority = value;
    else if (key == "TruePriority") cfg.true_priority = value;
    else if (key == "FalsePriority") cfg.false_priority = value;
    else if (key == "AndPriority") cfg.and_priority = value;
    else if (key == "OrPriority") cfg.or_priority = value;
    else if (key == "UntilPriority") cfg.until_priority = value;
    else if (key == "DefaultOperatorPriority") cfg.default_operator_priority = value;
    else if (key == "XorPriority") cfg.xor_priority = value;
    else if (key == "EquivalencePriority") cfg.equivalence_priority = value;
    else if (key == "BeforePriority") cfg.before_priority = value;
    else if (key == "WeakUntilPriority") cfg.weak_until_priority = value;
    else if (key == "StrongReleasePriority") cfg.strong_release_priority = value;
    else throw std::invalid_argument("unknown weight: " + key);
  }
  return cfg;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTL to Buchi automata translator"};
  app.require_subcommand(1);

  TranslateArgs targs;
  auto* tr = app.add_subcommand("translate", "translate a formula to an automaton");
  tr->add_option("-f,--formula", targs.formula, "LTL formula text");
  tr->add_option("-F,--file", targs.file, "read the formula from a file");
  tr->add_option("--mode", targs.mode, "VWAA construction")
      ->check(CLI::IsMember({"original", "improved"}));
  tr->add_option("--vwaa-simplify", targs.vwaa_simplify, "VWAA transition simplification")
      ->check(CLI::IsMember({"off", "basic", "general"}));
  tr->add_option("--ba-merge", targs.ba_merge, "BA state-merge rule")
      ->check(CLI::IsMember({"basic", "selfloop"}));
  tr->add_option("--format", targs.format, "output format")
      ->check(CLI::IsMember({"never", "hoa", "dot"}));
  tr->add_option("--stage", targs.stage, "stop after this stage")
      ->check(CLI::IsMember({"vwaa", "tgba", "ba"}));
  tr->add_flag("--no-reduce", targs.no_reduce, "skip formula rewriting");
  tr->add_option("--disable-rule", targs.disabled_rules,
                 "turn off one rewrite group (constant-folds, alternating-collapse, "
                 "class-collapse, until-absorption, x-factoring, conditional)");
  tr->add_flag("--no-suspend", targs.no_suspend, "disable TGBA-level suspension");
  tr->add_flag("--no-gf-fastpath", targs.no_gf_fastpath, "disable the GF-component fast path");
  tr->add_flag("--no-temporal-progress", targs.no_temporal_progress,
               "count non-temporal formulae as progress formulae");
  tr->add_flag("--stats", targs.show_stats, "print automaton statistics to stderr");

  std::string fam_name;
  int fam_n = 1;
  auto* fam = app.add_subcommand("family", "print a parametric benchmark formula");
  fam->add_option("name", fam_name, "family name")->required();
  fam->add_option("n", fam_n, "parameter (>= 1)")->required();

  struct {
    std::string size = "15..20";
    uint32_t props = 8;
    uint64_t seed = 1;
    uint32_t count = 1;
    std::string weights;
  } gargs;
  auto* gen = app.add_subcommand("gen", "generate random formulae");
  gen->add_option("--size", gargs.size, "size range lo..hi");
  gen->add_option("--props", gargs.props, "number of propositions");
  gen->add_option("--seed", gargs.seed, "random seed");
  gen->add_option("--count", gargs.count, "how many formulae");
  gen->add_option("--weights", gargs.weights, "weights file (Name = value lines)");

  struct {
    std::string family;
    int max_n = 8;
    double timeout = 60.0;
  } bargs;
  auto* bench = app.add_subcommand("bench", "translate a family for n = 1..N, print CSV");
  bench->add_option("family", bargs.family, "family name")->required();
  bench->add_option("--max-n", bargs.max_n, "largest parameter");
  bench->add_option("--timeout", bargs.timeout, "per-formula time budget in seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tr->parsed())
      return run_translate(targs);

    if (fam->parsed()) {
      Session s;
      std::cout << family(s, fam_name, fam_n).ascii() << '\n';
      return 0;
    }

    if (gen->parsed()) {
      GenConfig cfg;
      auto dots = gargs.size.find("..");
      if (dots == std::string::npos)
        throw std::invalid_argument("size must be lo..hi");
      cfg.size_lo = uint32_t(std::stoul(gargs.size.substr(0, dots)));
      cfg.size_hi = uint32_t(std::stoul(gargs.size.substr(dots + 2)));
      cfg.propositions = gargs.props;
      cfg.seed = gargs.seed;
      if (!gargs.weights.empty())
        cfg = load_weights(cfg, gargs.weights);
      Session s;
      RandomFormulaGen g(s, cfg);
      for (uint32_t i = 0; i < gargs.count; ++i)
        std::cout << g().ascii() << '\n';
      return 0;
    }

    if (bench->parsed()) {
      std::cout << "name,n,states,transitions,deterministic,millis\n";
      for (int n = 1; n <= bargs.max_n; ++n) {
        Session s;
        Formula f = family(s, bargs.family, n);
        PipelineConfig cfg;
        auto t0 = std::chrono::steady_clock::now();
        Translation t = run_pipeline(s, f, cfg);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::cout << bargs.family << ',' << n << ',' << t.ba_stats.states << ','
                  << t.ba_stats.transitions << ','
                  << (t.ba_stats.deterministic ? 1 : 0) << ',' << ms << '\n';
        if (ms > bargs.timeout * 1000.0)
          break;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
