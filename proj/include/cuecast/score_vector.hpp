#pragma once

#include <span>
#include <vector>

#include "cuecast/taxonomy.hpp"

namespace cuecast {

enum class ScoreKind : std::uint8_t { kLogits, kProbabilities };

inline constexpr double kProbabilitySumTolerance = 1e-6;

// Per-class scores over one of the two taxonomies. Values are validated on
// construction: always finite, and for probabilities non-negative with a
// sum within kProbabilitySumTolerance of 1.
struct ScoreVector {
  ClassSet class_set = ClassSet::kBasic;
  ScoreKind kind = ScoreKind::kLogits;
  std::vector<double> values;

  static ScoreVector make(ClassSet set, ScoreKind kind,
                          std::vector<double> values);
};

void validate_scores(ClassSet set, ScoreKind kind,
                     std::span<const double> values);

// Softmax. Argmax-preserving and shift-invariant; the result sums to 1
// within kProbabilitySumTolerance.
ScoreVector normalize(const ScoreVector& logits);
std::vector<double> softmax(std::span<const double> values);

// Index of the largest value; exact ties resolve to the lowest index.
std::size_t argmax_lowest(std::span<const double> values);

}  // namespace cuecast
