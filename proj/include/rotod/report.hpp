#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotod/divisibility.hpp"
#include "rotod/export.hpp"
#include "rotod/measures.hpp"

namespace rotod {

inline constexpr int kSchemaVersion = 1;

struct AnalysisOptions {
  NConvention convention = NConvention::Geq;
  std::size_t levels = 4;          // levels listed with their heights
  std::size_t depth = 3;           // diagram depth for the edge census
  std::size_t mod_max = 20;        // dyadic scan bound
  HeightSeed seed = HeightSeed::Ones;
  std::size_t prefix_length = 64;  // fixed point letters shown
  std::size_t coding_length = 256;
  std::uint32_t periodic_resolution = 1;  // cell resolution of the periodic region
  Limits limits;
  bool timings = false;            // wall time in the JSON (breaks byte equality)
};

struct LevelSummary {
  std::size_t level = 0;
  std::string perm;
  Substitution chi;
  IntegerMatrix matrix;
  bool covering = false;
  std::size_t total_length = 0;
  HeightVector heights;  // h^{(level)}
};

struct AnalysisReport {
  AnalysisOptions options;
  std::uint64_t q = 0;
  Permutation pi;
  std::uint32_t n_exp = 0;
  bool power_of_two = false;
  bool degenerate = false;

  RenormSeq seq;
  std::vector<LevelSummary> levels;
  PeriodicClass periodic = PeriodicClass::Empty;
  BigRational periodic_measure;  // at options.periodic_resolution
  TelescopedSystem telescoped;
  PerronData perron;
  std::vector<Letter> minimal_alphabet;
  PerronData minimal_perron;
  MeasureReport measures;
  bool lebesgue_ergodic = false;
  DyadicScan dyadic;
  /// The scan under the other seed, kept only when its summary differs.
  std::optional<DyadicScan> dyadic_other_seed;
  std::vector<std::size_t> diagram_edges;  // per level, full diagram
  std::vector<std::size_t> diagram_edges_aperiodic;
  std::optional<Word> fixed_point;
  std::optional<CodingCheck> coding;
  std::vector<std::string> notes;
  std::optional<double> seconds;
};

/// Throws ParseError for a malformed permutation, PreconditionError when
/// it does not act on q symbols.
AnalysisReport analyze(std::uint64_t q, std::string_view perm, const AnalysisOptions& options = {});

Json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

struct SurveyRow {
  std::string perm;
  PeriodicClass periodic = PeriodicClass::Empty;
  bool ergodic = false;
  std::size_t measures = 0;
  std::string dyadic;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  bool power_of_two = false;
};

struct SurveyOptions {
  NConvention convention = NConvention::Geq;
  std::size_t mod_max = 20;
  std::uint64_t max_q = 7;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One row per permutation of q symbols, in lexicographic image order.
std::vector<SurveyRow> survey(std::uint64_t q, const SurveyOptions& options = {});
std::string survey_csv(const std::vector<SurveyRow>& rows);
Json survey_json(std::uint64_t q, const std::vector<SurveyRow>& rows);

}  // namespace rotod
