#pragma once

#include "ltl2buchi/ba.hpp"
#include "ltl2buchi/emit.hpp"
#include "ltl2buchi/oracle.hpp"
#include "ltl2buchi/reduce.hpp"

#include <memory>
#include <string>

namespace ltl2buchi {

enum class OutFormat { Never, Hoa, Dot };
enum class Stage { VwaaStage, TgbaStage, BaStage };

/// Pipeline configuration.  The defaults are the full improved pipeline.
struct PipelineConfig {
  bool reduce_formula = true;
  RuleSet rules = RuleSet::all();
  VwaaMode mode = VwaaMode::Improved;
  VwaaSimplify vwaa_simplify = VwaaSimplify::General;
  bool tgba_suspend = true;
  bool temporal_progress_restriction = true;
  bool gf_fastpath = true;
  BaMerge ba_merge = BaMerge::SelfLoop;
  OutFormat format = OutFormat::Never;
  Stage stage = Stage::BaStage;
  bool want_stats = false;
};

/// Everything one translation produced.  The session owns the formula and
/// label tables all automata reference, so it travels with the result.
struct Translation {
  std::shared_ptr<Session> session;
  Formula input, pnf, reduced;
  Vwaa vwaa;
  Tgba tgba;
  Ba ba;
  BaStats ba_stats;
};

/// Run the pipeline on an already-parsed formula inside an existing session.
Translation run_pipeline(Session& s, Formula parsed, const PipelineConfig& cfg);

/// parse -> pnf -> reduce -> VWAA -> TGBA -> BA in a fresh session.
/// Throws ParseError on bad input.
Translation translate(const std::string& text, const PipelineConfig& cfg = {});

/// The output document for the configured stage/format.
std::string render(const Translation& t, const PipelineConfig& cfg);

} // namespace ltl2buchi
