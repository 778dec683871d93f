#include "cuecast/aggregate.hpp"

#include <algorithm>
#include <cmath>

#include "cuecast/error.hpp"

namespace cuecast {
namespace {

std::uint8_t modal_label(std::span<const std::int64_t> votes) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < votes.size(); ++c) {
    if (votes[c] > votes[best]) best = c;
  }
  return static_cast<std::uint8_t>(best);
}

void require_scores(const PredictionLog& log, LogKind kind,
                    const char* op_name) {
  if (log.kind != kind) {
    throw Error(ErrorCode::WrongKind,
                std::string(op_name) + " needs a " +
                    (kind == LogKind::kLogits ? "logits" : "probabilities") +
                    " log");
  }
  if (log.scores.empty()) {
    throw Error(ErrorCode::EmptyVideo, "prediction log has no frames");
  }
}

std::vector<double> mean_scores(const PredictionLog& log) {
  const std::size_t n_classes = class_count(log.class_set);
  std::vector<double> mean(n_classes, 0.0);
  for (const auto& frame : log.scores) {
    if (frame.size() != n_classes) {
      throw Error(ErrorCode::MixedClassSets,
                  "frame score width differs from the class set");
    }
    for (std::size_t c = 0; c < n_classes; ++c) mean[c] += frame[c];
  }
  for (double& v : mean) v /= static_cast<double>(log.scores.size());
  return mean;
}

}  // namespace

std::uint8_t video_label_majority(std::span<const std::uint8_t> frame_labels,
                                  ClassSet class_set) {
  if (frame_labels.empty()) {
    throw Error(ErrorCode::EmptyVideo, "no frame labels to vote over");
  }
  std::vector<std::int64_t> votes(class_count(class_set), 0);
  for (std::uint8_t label : frame_labels) {
    if (label >= votes.size()) {
      throw Error(ErrorCode::UnknownLabel,
                  "label id " + std::to_string(label) + " out of range");
    }
    ++votes[label];
  }
  return modal_label(votes);
}

std::uint8_t video_label_avg_logits(const PredictionLog& log) {
  require_scores(log, LogKind::kLogits, "video_label_avg_logits");
  const auto mean = mean_scores(log);
  return static_cast<std::uint8_t>(argmax_lowest(mean));
}

std::uint8_t video_label_avg_probs(const PredictionLog& log) {
  require_scores(log, LogKind::kProbabilities, "video_label_avg_probs");
  for (std::size_t t = 0; t < log.scores.size(); ++t) {
    validate_scores(log.class_set, ScoreKind::kProbabilities, log.scores[t]);
  }
  const auto mean = mean_scores(log);
  return static_cast<std::uint8_t>(argmax_lowest(mean));
}

std::uint8_t video_label(const PredictionLog& log, VideoStrategy strategy) {
  switch (strategy) {
    case VideoStrategy::kMajority:
      if (log.kind != LogKind::kLabels) {
        throw Error(ErrorCode::WrongKind, "majority voting needs a label log");
      }
      return video_label_majority(log.labels, log.class_set);
    case VideoStrategy::kAvgLogits:
      return video_label_avg_logits(log);
    case VideoStrategy::kAvgProbs:
      return video_label_avg_probs(log);
  }
  throw Error(ErrorCode::UsageError, "unknown strategy");
}

CompoundEmotion compound_from_basic(std::span<const double> basic_probs) {
  if (basic_probs.size() != kBasicCount) {
    throw Error(ErrorCode::WrongClassSet,
                "compound_from_basic needs 7 basic-class values");
  }
  for (double v : basic_probs) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::NonFiniteInput, "non-finite basic score");
    }
  }
  CompoundEmotion best = evaluated_compounds()[0];
  double best_score = -std::numeric_limits<double>::infinity();
  for (CompoundEmotion compound : evaluated_compounds()) {
    const auto [a, b] = pair_of(compound);
    const double score = basic_probs[static_cast<std::size_t>(a)] +
                         basic_probs[static_cast<std::size_t>(b)];
    if (score > best_score) {
      best_score = score;
      best = compound;
    }
  }
  return best;
}

CompoundEmotion compound_from_basic(const ScoreVector& probs) {
  if (probs.class_set != ClassSet::kBasic) {
    throw Error(ErrorCode::WrongClassSet,
                "compound_from_basic needs the basic class set");
  }
  return compound_from_basic(std::span<const double>(probs.values));
}

PredictionLog derive_compound_log(const PredictionLog& basic_log) {
  if (basic_log.class_set != ClassSet::kBasic) {
    throw Error(ErrorCode::WrongClassSet,
                "compound derivation needs a basic-class log");
  }
  if (basic_log.kind == LogKind::kLabels) {
    throw Error(ErrorCode::WrongKind,
                "compound derivation needs per-class scores, not labels");
  }
  PredictionLog out;
  out.model_id = basic_log.model_id;
  out.video_id = basic_log.video_id;
  out.frame_rate = basic_log.frame_rate;
  out.class_set = ClassSet::kCompound;
  out.kind = LogKind::kLabels;
  out.labels.reserve(basic_log.scores.size());
  for (const auto& frame : basic_log.scores) {
    std::vector<double> probs =
        basic_log.kind == LogKind::kLogits
            ? softmax(frame)
            : std::vector<double>(frame.begin(), frame.end());
    out.labels.push_back(
        static_cast<std::uint8_t>(compound_from_basic(probs)));
  }
  return out;
}

std::vector<std::uint8_t> ensemble_frames(
    std::span<const PredictionLog> label_logs, const EnsembleSpec& spec) {
  if (label_logs.empty()) {
    throw Error(ErrorCode::MisalignedLogs, "no prediction logs to ensemble");
  }
  if (spec.window < 1) {
    throw Error(ErrorCode::InvalidEnsembleSpec, "ensemble window must be >= 1");
  }
  const PredictionLog& first = label_logs[0];
  for (const auto& log : label_logs) {
    if (log.kind != LogKind::kLabels) {
      throw Error(ErrorCode::WrongKind, "ensembling needs label logs");
    }
    if (log.class_set != first.class_set) {
      throw Error(ErrorCode::MixedClassSets,
                  "prediction logs use different class sets");
    }
    if (log.video_id != first.video_id ||
        log.frame_count() != first.frame_count()) {
      throw Error(ErrorCode::MisalignedLogs,
                  "prediction logs cover different videos or frame ranges");
    }
  }
  const std::size_t n_frames = first.frame_count();
  if (n_frames == 0) {
    throw Error(ErrorCode::EmptyVideo, "prediction logs have no frames");
  }

  std::vector<int> weights;
  for (const auto& log : label_logs) {
    const auto it = spec.weights.find(log.model_id);
    const int w = it == spec.weights.end() ? 1 : it->second;
    if (w < 1) {
      throw Error(ErrorCode::InvalidEnsembleSpec,
                  "ensemble weights must be >= 1");
    }
    weights.push_back(w);
  }

  // Sliding vote counts: add frame t, retire frame t-window.
  std::vector<std::int64_t> votes(class_count(first.class_set), 0);
  std::vector<std::uint8_t> out(n_frames);
  for (std::size_t t = 0; t < n_frames; ++t) {
    for (std::size_t m = 0; m < label_logs.size(); ++m) {
      votes[label_logs[m].labels[t]] += weights[m];
    }
    if (t >= static_cast<std::size_t>(spec.window)) {
      const std::size_t retired = t - static_cast<std::size_t>(spec.window);
      for (std::size_t m = 0; m < label_logs.size(); ++m) {
        votes[label_logs[m].labels[retired]] -= weights[m];
      }
    }
    out[t] = modal_label(votes);
  }
  return out;
}

FilteredPairs exclude_other(std::span<const std::uint8_t> preds,
                            std::span<const std::uint8_t> gts) {
  if (preds.size() != gts.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "prediction and ground-truth sequences differ in length");
  }
  constexpr auto kOtherId =
      static_cast<std::uint8_t>(CompoundEmotion::kOther);
  FilteredPairs filtered;
  for (std::size_t i = 0; i < gts.size(); ++i) {
    if (gts[i] == kOtherId) continue;
    filtered.preds.push_back(preds[i]);
    filtered.gts.push_back(gts[i]);
  }
  return filtered;
}

}  // namespace cuecast
