#include "cuecast/score_vector.hpp"

#include <cmath>
#include <string>

#include "cuecast/error.hpp"

namespace cuecast {

void validate_scores(ClassSet set, ScoreKind kind,
                     std::span<const double> values) {
  if (values.size() != class_count(set)) {
    throw Error(ErrorCode::WrongClassSet,
                "expected " + std::to_string(class_count(set)) +
                    " values for the " + std::string(class_set_name(set)) +
                    " class set, got " + std::to_string(values.size()));
  }
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteInput, "non-finite score value");
    }
    if (kind == ScoreKind::kProbabilities && v < 0.0) {
      throw Error(ErrorCode::BadProbabilitySum,
                  "negative probability " + std::to_string(v));
    }
    sum += v;
  }
  if (kind == ScoreKind::kProbabilities &&
      std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw Error(ErrorCode::BadProbabilitySum,
                "probabilities sum to " + std::to_string(sum));
  }
}

ScoreVector ScoreVector::make(ClassSet set, ScoreKind kind,
                              std::vector<double> values) {
  validate_scores(set, kind, values);
  return ScoreVector{set, kind, std::move(values)};
}

std::vector<double> softmax(std::span<const double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::NonFiniteInput, "softmax of an empty vector");
  }
  double max_value = values[0];
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteInput, "non-finite logit");
    }
    max_value = std::max(max_value, v);
  }
  std::vector<double> out(values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = std::exp(values[i] - max_value);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

ScoreVector normalize(const ScoreVector& logits) {
  if (logits.kind != ScoreKind::kLogits) {
    throw Error(ErrorCode::WrongKind, "normalize expects logits");
  }
  return ScoreVector::make(logits.class_set, ScoreKind::kProbabilities,
                           softmax(logits.values));
}

std::size_t argmax_lowest(std::span<const double> values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace cuecast
