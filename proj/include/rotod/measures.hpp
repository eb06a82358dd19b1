#pragma once

#include <string>
#include <vector>

#include "rotod/diagram.hpp"
#include "rotod/frobenius.hpp"
#include "rotod/perron.hpp"

namespace rotod {

/// One nonzero diagonal block of the telescoped matrix and the outcome of
/// looking for a nonnegative left eigenvector of the full matrix at its
/// Perron value.
struct CandidateMeasure {
  std::vector<std::size_t> block;  // original labels
  PerronData perron;               // of the diagonal block
  bool accepted = false;
  std::string reason;  // empty when accepted
  /// Normalized so the first nonzero entry is 1; original labels.
  std::vector<long double> left_vector;
  /// The same vector in Frobenius (relabeled) coordinates.
  std::vector<long double> left_vector_frobenius;
  std::vector<std::size_t> support;

  long double value() const noexcept { return perron.radius; }
};

struct MeasureReport {
  IntegerMatrix matrix;
  FrobeniusForm form;
  std::vector<CandidateMeasure> candidates;

  std::size_t count() const;
};

/// Candidate ergodic measures of the aperiodic part: one per diagonal block
/// of spectral radius > 1 admitting a nonnegative left eigenvector of the
/// whole matrix.
MeasureReport measure_report(const IntegerMatrix& b);
MeasureReport measure_report(const RenormSeq& seq);

/// Lebesgue measure is ergodic iff there are no periodic points.
bool lebesgue_ergodic(const RenormSeq& seq);

}  // namespace rotod
