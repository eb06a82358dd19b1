#include "rotod/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>
#include <thread>

#include "rotod/errors.hpp"

namespace rotod {

namespace {

const char* to_string(NConvention c) { return c == NConvention::Geq ? "geq" : "strict"; }

std::string ld_string(long double v) {
  std::ostringstream os;
  os.precision(15);
  os << static_cast<double>(v);
  return os.str();
}

Json perron_json(const PerronData& p) {
  Json j;
  j["char_poly"] = to_json(p.char_poly);
  j["char_poly_text"] = poly_to_string(p.char_poly);
  j["radius"] = p.decimal();
  j["error_bound"] = static_cast<double>(p.error_bound);
  if (p.exact_integer) j["exact_integer"] = to_json(*p.exact_integer);
  j["power_estimate"] = static_cast<double>(p.power_estimate);
  j["power_converged"] = p.power_converged;
  return j;
}

Json scan_json(const DyadicScan& s) {
  Json j;
  j["seed"] = to_string(s.steps.front().options.seed);
  j["alphabet"] = to_string(s.steps.front().options.alphabet);
  j["max_m"] = s.max_m;
  j["summary"] = s.summary();
  j["all_pass"] = s.all_pass;
  j["fails_at"] = s.fails_at ? Json(*s.fails_at) : Json(nullptr);
  Json steps = Json::array();
  for (const auto& v : s.steps) {
    Json e;
    e["d"] = v.d;
    e["verdict"] = v.verdict;
    e["transient"] = v.transient;
    e["cycle"] = v.cycle;
    if (v.witness) e["witness"] = *v.witness;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json letters_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string join_letters(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

AnalysisReport analyze(std::uint64_t q, std::string_view perm, const AnalysisOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.options = options;
  r.q = q;
  r.pi = Permutation::parse(perm, static_cast<std::size_t>(q));
  if (r.pi.size() != q)
    throw PreconditionError("permutation acts on " + std::to_string(r.pi.size()) + " symbols, expected q = " +
                            std::to_string(q));
  RotatedOdometer sys(r.pi, options.convention);
  r.n_exp = sys.n_exp();
  r.power_of_two = sys.is_power_of_two();
  r.degenerate = sys.is_degenerate();
  if (r.degenerate) r.notes.push_back("q = 1: the rotation is trivial and F is the odometer itself");
  if (r.power_of_two) r.notes.push_back("q is a power of two: outside the range the analysis is tuned for");

  r.seq = renorm_sequence(sys);
  for (std::size_t k = 1; k <= std::max<std::size_t>(options.levels, 1); ++k) {
    const LevelRecord& rec = r.seq.level(k);
    LevelSummary s;
    s.level = k;
    s.perm = rec.perm.to_cycle_string();
    s.chi = rec.chi;
    s.matrix = rec.matrix;
    s.covering = rec.covering;
    s.total_length = rec.chi.total_length();
    s.heights = heights(r.seq, k);
    r.levels.push_back(std::move(s));
  }
  r.periodic = covering_status(r.seq);
  r.periodic_measure = total_length(periodic_region(sys, options.periodic_resolution, options.limits));
  r.telescoped = telescope(r.seq);
  r.perron = perron_data(r.telescoped.b);
  r.minimal_alphabet = minimal_alphabet(r.seq);
  std::vector<std::size_t> min_idx(r.minimal_alphabet.begin(), r.minimal_alphabet.end());
  r.minimal_perron = perron_data(r.telescoped.b.restricted(min_idx));
  r.measures = measure_report(r.seq);
  r.lebesgue_ergodic = lebesgue_ergodic(r.seq);

  DivisibilityOptions dopt;
  dopt.seed = options.seed;
  r.dyadic = dyadic_scan(r.seq, options.mod_max, dopt);
  DivisibilityOptions other = dopt;
  other.seed = options.seed == HeightSeed::Ones ? HeightSeed::Telescoped : HeightSeed::Ones;
  DyadicScan alt = dyadic_scan(r.seq, options.mod_max, other);
  if (alt.summary() != r.dyadic.summary()) r.dyadic_other_seed = std::move(alt);

  OrderedDiagram full(r.seq, options.depth, VertexSelection::All);
  OrderedDiagram aper(r.seq, options.depth, VertexSelection::Aperiodic);
  for (std::size_t k = 1; k < options.depth; ++k) {
    r.diagram_edges.push_back(full.edge_count(k));
    r.diagram_edges_aperiodic.push_back(aper.edge_count(k));
  }

  try {
    r.fixed_point = fixed_point_prefix(r.seq, options.prefix_length);
    r.coding = coding_check(sys, options.coding_length);
  } catch (const PreconditionError& e) {
    r.notes.push_back(std::string("fixed point: ") + e.what());
  }
  if (options.timings)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json in;
  in["q"] = r.q;
  in["perm"] = r.pi.to_cycle_string();
  in["images"] = r.pi.images();
  in["n_convention"] = to_string(r.options.convention);
  in["n_exp"] = r.n_exp;
  in["power_of_two"] = r.power_of_two;
  in["degenerate"] = r.degenerate;
  j["input"] = std::move(in);

  Json ren;
  ren["preperiod"] = r.seq.preperiod;
  ren["period"] = r.seq.period;
  Json levels = Json::array();
  for (const auto& s : r.levels) {
    Json l;
    l["level"] = s.level;
    l["perm"] = s.perm;
    l["chi"] = to_json(s.chi);
    l["matrix"] = to_json(s.matrix);
    l["covering"] = s.covering;
    l["total_length"] = s.total_length;
    l["heights"] = to_json(s.heights.h);
    levels.push_back(std::move(l));
  }
  ren["levels"] = std::move(levels);
  j["renormalization"] = std::move(ren);

  j["periodic_region"] = {{"class", to_string(r.periodic)},
                         {"resolution", r.options.periodic_resolution},
                         {"measure", to_json(r.periodic_measure)}};
  j["telescoped"] = {{"b", to_json(r.telescoped.b)}, {"w", to_json(r.telescoped.w)}};
  j["perron"] = perron_json(r.perron);
  j["minimal_alphabet"] = r.minimal_alphabet;
  j["minimal_perron"] = perron_json(r.minimal_perron);

  Json meas;
  Json blocks = Json::array();
  for (const auto& b : r.measures.form.blocks) blocks.push_back(letters_json(b));
  meas["blocks"] = std::move(blocks);
  Json disp = Json::array();
  for (const auto& b : r.measures.form.display_blocks) disp.push_back(letters_json(b));
  meas["display_blocks"] = std::move(disp);
  meas["order"] = r.measures.form.order;
  Json cands = Json::array();
  for (const auto& c : r.measures.candidates) {
    Json e;
    e["block"] = letters_json(c.block);
    e["value"] = c.perron.decimal();
    e["accepted"] = c.accepted;
    if (c.accepted) {
      Json v = Json::array();
      for (long double x : c.left_vector) v.push_back(static_cast<double>(x));
      e["left_vector"] = std::move(v);
      e["support"] = letters_json(c.support);
    } else {
      e["reason"] = c.reason;
    }
    cands.push_back(std::move(e));
  }
  meas["candidates"] = std::move(cands);
  meas["count"] = r.measures.count();
  j["measures"] = std::move(meas);
  j["lebesgue_ergodic"] = r.lebesgue_ergodic;

  j["dyadic_scan"] = scan_json(r.dyadic);
  if (r.dyadic_other_seed) j["dyadic_scan_other_seed"] = scan_json(*r.dyadic_other_seed);
  j["diagram"] = {{"depth", r.options.depth},
                  {"edges", r.diagram_edges},
                  {"edges_aperiodic", r.diagram_edges_aperiodic}};
  if (r.fixed_point) j["fixed_point_prefix"] = word_to_string(*r.fixed_point, r.q);
  if (r.coding)
    j["coding_check"] = {{"n", r.options.coding_length},
                         {"itinerary_matches", r.coding->itinerary_matches},
                         {"vershik_matches", r.coding->vershik_matches}};
  j["notes"] = r.notes;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "rotated odometer q=" << r.q << " pi=" << r.pi.to_cycle_string() << " N=" << r.n_exp << " ("
     << to_string(r.options.convention) << ")\n";
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  os << "preperiod k0=" << r.seq.preperiod << " period p0=" << r.seq.period << '\n';
  for (const auto& s : r.levels) {
    os << "\nlevel " << s.level << ": pi_" << s.level << " = " << s.perm << ", sum |chi| = " << s.total_length
       << (s.covering ? " (covering)" : " (not covering)") << '\n';
    os << s.chi.to_string();
    os << s.matrix.to_string();
    os << "h^(" << s.level << ") = (";
    for (std::size_t i = 0; i < s.heights.h.size(); ++i) os << (i ? "," : "") << s.heights.h[i];
    os << ")\n";
  }
  os << "\nperiodic region: " << to_string(r.periodic) << ", measure at resolution " << r.options.periodic_resolution << " = "
     << r.periodic_measure
     << '\n';
  os << "lebesgue ergodic: " << (r.lebesgue_ergodic ? "yes" : "no") << '\n';
  os << "\ntelescoped B:\n" << r.telescoped.b.to_string();
  os << "w = (";
  for (std::size_t i = 0; i < r.telescoped.w.size(); ++i) os << (i ? "," : "") << r.telescoped.w[i];
  os << ")\n";
  os << "char poly " << poly_to_string(r.perron.char_poly) << ", radius " << r.perron.decimal() << '\n';
  std::vector<std::size_t> min_idx(r.minimal_alphabet.begin(), r.minimal_alphabet.end());
  os << "minimal alphabet " << join_letters(min_idx) << ", radius " << r.minimal_perron.decimal() << '\n';
  os << "\nfrobenius blocks:";
  for (const auto& b : r.measures.form.display_blocks) os << ' ' << join_letters(b);
  os << '\n';
  for (const auto& c : r.measures.candidates) {
    os << "  block " << join_letters(c.block) << " lambda=" << c.perron.decimal();
    if (c.accepted) {
      os << " measure, v=(";
      for (std::size_t i = 0; i < c.left_vector.size(); ++i) os << (i ? "," : "") << ld_string(c.left_vector[i]);
      os << ")\n";
    } else {
      os << " rejected: " << c.reason << '\n';
    }
  }
  os << "candidate ergodic measures: " << r.measures.count() << '\n';
  os << "\ndyadic eigenvalues (" << to_string(r.options.seed) << " seed, minimal alphabet): " << r.dyadic.summary()
     << '\n';
  if (r.dyadic_other_seed)
    os << "  with " << to_string(r.dyadic_other_seed->steps.front().options.seed)
       << " seed: " << r.dyadic_other_seed->summary() << '\n';
  os << "diagram edges per level (depth " << r.options.depth << "):";
  for (auto e : r.diagram_edges) os << ' ' << e;
  os << ", aperiodic:";
  for (auto e : r.diagram_edges_aperiodic) os << ' ' << e;
  os << '\n';
  if (r.fixed_point) os << "fixed point " << word_to_string(*r.fixed_point, r.q) << "...\n";
  if (r.coding)
    os << "coding check n=" << r.options.coding_length << ": itinerary "
       << (r.coding->itinerary_matches ? "ok" : "MISMATCH") << ", vershik "
       << (r.coding->vershik_matches ? "ok" : "MISMATCH") << '\n';
  if (r.seconds) os << "time " << *r.seconds << " s\n";
  return os.str();
}

namespace {

SurveyRow survey_row(const Permutation& p, const SurveyOptions& options) {
  RotatedOdometer sys(p, options.convention);
  RenormSeq seq = renorm_sequence(sys);
  SurveyRow row;
  row.perm = p.to_cycle_string();
  row.periodic = covering_status(seq);
  row.ergodic = lebesgue_ergodic(seq);
  row.measures = measure_report(seq).count();
  row.dyadic = dyadic_scan(seq, options.mod_max).summary();
  row.preperiod = seq.preperiod;
  row.period = seq.period;
  row.power_of_two = sys.is_power_of_two();
  return row;
}

}  // namespace

std::vector<SurveyRow> survey(std::uint64_t q, const SurveyOptions& options) {
  if (q == 0 || q > options.max_q)
    throw PreconditionError("survey: q must lie in 1.." + std::to_string(options.max_q));
  std::vector<Permutation> perms = all_permutations(static_cast<std::size_t>(q));
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, perms.size()));
  std::vector<SurveyRow> rows(perms.size());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < perms.size(); i += workers) rows[i] = survey_row(perms[i], options);
    }));
  for (auto& j : jobs) j.get();
  return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "perm,periodic,ergodic,measures,dyadic,k0,p0,power_of_two\n";
  for (const auto& r : rows)
    os << r.perm << ',' << to_string(r.periodic) << ',' << (r.ergodic ? "true" : "false") << ',' << r.measures << ','
       << r.dyadic << ',' << r.preperiod << ',' << r.period << ',' << (r.power_of_two ? "true" : "false") << '\n';
  return os.str();
}

Json survey_json(std::uint64_t q, const std::vector<SurveyRow>& rows) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = q;
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"perm", r.perm},
                 {"periodic", to_string(r.periodic)},
                 {"ergodic", r.ergodic},
                 {"measures", r.measures},
                 {"dyadic", r.dyadic},
                 {"k0", r.preperiod},
                 {"p0", r.period},
                 {"power_of_two", r.power_of_two}});
  j["rows"] = std::move(a);
  return j;
}

}  // namespace rotod
