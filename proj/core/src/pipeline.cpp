#include "ltl2buchi/pipeline.hpp"

#include <stdexcept>

namespace ltl2buchi {

Translation run_pipeline(Session& s, Formula parsed, const PipelineConfig& cfg) {
  Translation t;
  t.input = parsed;
  t.pnf = to_pnf(s.formulas, parsed);
  t.reduced = cfg.reduce_formula ? reduce(s, t.pnf, cfg.rules) : t.pnf;

  t.vwaa = simplify_vwaa(build_vwaa(s, t.reduced, cfg.mode), cfg.vwaa_simplify);
  if (cfg.stage == Stage::VwaaStage)
    return t;

  TgbaOptions topt;
  topt.suspend = cfg.tgba_suspend;
  topt.temporal_progress_restriction = cfg.temporal_progress_restriction;
  topt.gf_fastpath = cfg.gf_fastpath;
  t.tgba = simplify_tgba(build_tgba(t.vwaa, topt));
  if (cfg.stage == Stage::TgbaStage)
    return t;

  t.ba = simplify_ba(degeneralize(t.tgba), cfg.ba_merge);
  t.ba_stats = stats(t.ba);
  return t;
}

Translation translate(const std::string& text, const PipelineConfig& cfg) {
  auto session = std::make_shared<Session>();
  Formula parsed = parse(session->formulas, text);
  Translation t = run_pipeline(*session, parsed, cfg);
  t.session = session;
  return t;
}

std::string render(const Translation& t, const PipelineConfig& cfg) {
  switch (cfg.stage) {
  case Stage::VwaaStage:
    if (cfg.format == OutFormat::Dot)
      return t.vwaa.dot();
    throw std::invalid_argument("VWAA supports only dot output");
  case Stage::TgbaStage:
    if (cfg.format == OutFormat::Dot)
      return t.tgba.dot();
    if (cfg.format == OutFormat::Hoa)
      return to_hoa(t.tgba, t.input.str());
    throw std::invalid_argument("TGBA supports hoa and dot output");
  case Stage::BaStage:
    switch (cfg.format) {
    case OutFormat::Never:
      return to_never_claim(t.ba, t.input.ascii());
    case OutFormat::Hoa:
      return to_hoa(t.ba, t.input.str());
    case OutFormat::Dot:
      return t.ba.dot();
    }
  }
  throw std::invalid_argument("unsupported stage/format combination");
}

} // namespace ltl2buchi
