#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rotod/errors.hpp"
#include "rotod/report.hpp"
#include "rotod/surface.hpp"

using namespace rotod;

namespace {

struct Common {
  std::uint64_t q = 0;
  std::string perm;
  std::string convention = "geq";
  std::string format = "text";
};

NConvention convention_of(const std::string& s) { return s == "strict" ? NConvention::Strict : NConvention::Geq; }

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats, bool needs_perm = true) {
  cmd->add_option("--q", c.q, "number of subintervals")->required();
  auto* p = cmd->add_option("--perm", c.perm, "permutation, cycle notation or image list");
  if (needs_perm) p->required();
  cmd->add_option("--n-convention", c.convention, "exponent convention")
      ->check(CLI::IsMember({"geq", "strict"}));
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
}

RotatedOdometer system_of(const Common& c) {
  Permutation pi = Permutation::parse(c.perm, static_cast<std::size_t>(c.q));
  if (pi.size() != c.q)
    throw PreconditionError("permutation acts on " + std::to_string(pi.size()) + " symbols, expected q = " +
                            std::to_string(c.q));
  return RotatedOdometer(pi, convention_of(c.convention));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotod: renormalization and spectral data of rotated odometers"};
  app.require_subcommand(1);

  Common c;
  std::size_t levels = 4, depth = 3, mod_max = 20, count = 16;
  std::string seed = "ones", start = "0";
  std::uint64_t p = 0;
  bool restrict_aperiodic = false, timings = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report");
  add_common(analyze_cmd, c, {"text", "json"});
  analyze_cmd->add_option("--levels", levels, "levels listed");
  analyze_cmd->add_option("--depth", depth, "diagram depth");
  analyze_cmd->add_option("--mod-max", mod_max, "largest m in the dyadic scan");
  analyze_cmd->add_option("--seed", seed, "height seed")->check(CLI::IsMember({"ones", "telescoped"}));
  analyze_cmd->add_flag("--timings", timings, "include wall time");
  std::uint32_t resolution = 1;
  std::uint64_t max_cells = Limits{}.max_cells;
  analyze_cmd->add_option("--resolution", resolution, "cell resolution k of the periodic region")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--max-cells", max_cells, "cell budget");

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit points and itinerary");
  add_common(orbit_cmd, c, {"text", "json"});
  orbit_cmd->add_option("--x", start, "start point, e.g. 5/(3*2^1)");
  orbit_cmd->add_option("-n,--count", count, "orbit length");

  auto* subst_cmd = app.add_subcommand("substitution", "renormalization levels");
  add_common(subst_cmd, c, {"text", "json"});
  subst_cmd->add_option("--levels", levels, "levels listed");

  auto* diagram_cmd = app.add_subcommand("diagram", "ordered Bratteli diagram");
  add_common(diagram_cmd, c, {"text", "json", "dot"});
  diagram_cmd->add_option("--depth", depth, "levels below the root");
  diagram_cmd->add_flag("--aperiodic", restrict_aperiodic, "keep only vertices meeting the aperiodic set");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Frobenius form, Perron data, measures, divisibility");
  add_common(spectrum_cmd, c, {"text", "json"});
  spectrum_cmd->add_option("--mod-max", mod_max, "largest m in the dyadic scan");
  spectrum_cmd->add_option("--seed", seed, "height seed")->check(CLI::IsMember({"ones", "telescoped"}));

  auto* surface_cmd = app.add_subcommand("surface", "slope and vertical-edge permutations");
  add_common(surface_cmd, c, {"text", "json"}, false);
  surface_cmd->add_option("--p", p, "horizontal period p of the slope q/p")->required();

  auto* survey_cmd = app.add_subcommand("survey", "all permutations of q symbols");
  add_common(survey_cmd, c, {"csv", "json", "text"}, false);
  survey_cmd->add_option("--mod-max", mod_max, "largest m in the dyadic scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostream& out = std::cout;
    if (analyze_cmd->parsed() || spectrum_cmd->parsed()) {
      AnalysisOptions opt;
      opt.convention = convention_of(c.convention);
      opt.levels = levels;
      opt.depth = std::max<std::size_t>(depth, 1);
      opt.mod_max = mod_max;
      opt.seed = seed == "telescoped" ? HeightSeed::Telescoped : HeightSeed::Ones;
      opt.timings = timings;
      opt.periodic_resolution = resolution;
      opt.limits.max_cells = max_cells;
      AnalysisReport r = analyze(c.q, c.perm, opt);
      if (analyze_cmd->parsed()) {
        out << (c.format == "json" ? to_json(r).dump(2) + "\n" : to_text(r));
      } else {
        Json j = to_json(r);
        Json s;
        s["schema_version"] = kSchemaVersion;
        s["input"] = j["input"];
        for (const char* key : {"telescoped", "perron", "minimal_alphabet", "minimal_perron", "measures",
                                "lebesgue_ergodic", "dyadic_scan"})
          s[key] = j[key];
        if (j.contains("dyadic_scan_other_seed")) s["dyadic_scan_other_seed"] = j["dyadic_scan_other_seed"];
        if (c.format == "json") {
          out << s.dump(2) << '\n';
        } else {
          std::string text = to_text(r);
          out << text.substr(text.find("\ntelescoped B:") + 1);
        }
      }
    } else if (orbit_cmd->parsed()) {
      RotatedOdometer sys = system_of(c);
      Itinerary it = orbit_itinerary(sys, Dyadic::parse(start), count);
      if (c.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        Json pts = Json::array();
        for (const auto& x : it.points) pts.push_back(x.to_string());
        j["points"] = std::move(pts);
        j["letters"] = word_to_string(it.letters, sys.q());
        out << j.dump(2) << '\n';
      } else {
        for (std::size_t t = 0; t < it.points.size(); ++t) out << t << ' ' << it.points[t] << ' ' << it.letters[t] << '\n';
        out << "itinerary " << word_to_string(it.letters, sys.q()) << '\n';
      }
    } else if (subst_cmd->parsed()) {
      RotatedOdometer sys = system_of(c);
      RenormSeq seq = renorm_sequence(sys);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["preperiod"] = seq.preperiod;
      j["period"] = seq.period;
      Json lv = Json::array();
      std::ostringstream text;
      text << "k0=" << seq.preperiod << " p0=" << seq.period << '\n';
      for (std::size_t k = 1; k <= std::max<std::size_t>(levels, 1); ++k) {
        const LevelRecord& rec = seq.level(k);
        lv.push_back({{"level", k},
                      {"source", rec.source.to_cycle_string()},
                      {"perm", rec.perm.to_cycle_string()},
                      {"chi", to_json(rec.chi)},
                      {"matrix", to_json(rec.matrix)},
                      {"return_times", rec.return_times},
                      {"covering", rec.covering}});
        text << "\nlevel " << k << ": " << rec.source.to_cycle_string() << " -> " << rec.perm.to_cycle_string()
             << (rec.covering ? " covering" : " not covering") << '\n'
             << rec.chi.to_string() << rec.matrix.to_string();
      }
      j["levels"] = std::move(lv);
      out << (c.format == "json" ? j.dump(2) + "\n" : text.str());
    } else if (diagram_cmd->parsed()) {
      RotatedOdometer sys = system_of(c);
      RenormSeq seq = renorm_sequence(sys);
      OrderedDiagram d = build_diagram(seq, std::max<std::size_t>(depth, 1), restrict_aperiodic);
      if (c.format == "dot") {
        out << export_dot(d);
      } else if (c.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["depth"] = d.depth();
        Json lv = Json::array();
        for (std::size_t k = 1; k <= d.depth(); ++k) lv.push_back(d.vertices(k));
        j["vertices"] = std::move(lv);
        Json ed = Json::array();
        for (std::size_t k = 1; k < d.depth(); ++k) {
          Json level = Json::array();
          for (const auto& e : d.edges(k)) level.push_back({e.source, e.target, e.rank});
          ed.push_back(std::move(level));
        }
        j["edges"] = std::move(ed);
        out << j.dump(2) << '\n';
      } else {
        for (std::size_t k = 1; k <= d.depth(); ++k) {
          out << "V" << k << ":";
          for (Letter v : d.vertices(k)) out << ' ' << v;
          out << '\n';
          if (k < d.depth())
            for (Letter v : d.vertices(k + 1))
              out << "  in(" << v << ") = " << word_to_string(d.incoming(k, v), d.alphabet_size()) << '\n';
        }
      }
    } else if (surface_cmd->parsed()) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["q"] = c.q;
      j["p"] = p;
      Permutation slope = slope_permutation(c.q, p);
      j["slope_permutation"] = slope.to_cycle_string();
      if (!c.perm.empty()) {
        RotatedOdometer sys = system_of(c);
        Permutation v = vertical_permutation(sys.pi(), p);
        j["vertical_permutation"] = v.to_cycle_string();
        j["round_trip"] = horizontal_from_vertical(v, c.q) == sys.pi();
      }
      if (c.format == "json") {
        out << j.dump(2) << '\n';
      } else {
        out << "slope " << c.q << "/" << p << ": " << slope.to_cycle_string() << '\n';
        if (j.contains("vertical_permutation"))
          out << "vertical permutation: " << j["vertical_permutation"].get<std::string>() << '\n';
      }
    } else if (survey_cmd->parsed()) {
      SurveyOptions opt;
      opt.convention = convention_of(c.convention);
      opt.mod_max = mod_max;
      auto rows = survey(c.q, opt);
      if (c.format == "json") {
        out << survey_json(c.q, rows).dump(2) << '\n';
      } else if (c.format == "text") {
        std::size_t w = 4;
        for (const auto& r : rows) w = std::max(w, r.perm.size());
        auto pad = [](std::string s, std::size_t n) { return s.append(n > s.size() ? n - s.size() : 0, ' '); };
        out << pad("perm", w) << "  periodic  ergodic  measures  k0  p0  dyadic\n";
        for (const auto& r : rows)
          out << pad(r.perm, w) << "  " << pad(to_string(r.periodic), 8) << "  " << pad(r.ergodic ? "yes" : "no", 7)
              << "  " << pad(std::to_string(r.measures), 8) << "  " << pad(std::to_string(r.preperiod), 2) << "  "
              << pad(std::to_string(r.period), 2) << "  " << r.dyadic << '\n';
      } else {
        out << survey_csv(rows);
      }
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
