#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cuecast/ingest.hpp"
#include "cuecast/score_vector.hpp"

namespace cuecast {

enum class VideoStrategy : std::uint8_t { kMajority, kAvgLogits, kAvgProbs };

struct EnsembleSpec {
  std::int64_t window = 10;               // frame t and its 9 predecessors
  std::map<std::string, int> weights;     // model_id -> vote multiplicity
};

// Modal label over all frames; ties go to the lowest class id.
std::uint8_t video_label_majority(std::span<const std::uint8_t> frame_labels,
                                  ClassSet class_set);

// Argmax of the element-wise mean logit vector; ties to the lowest id.
std::uint8_t video_label_avg_logits(const PredictionLog& log);

// Argmax of the mean probability vector; ties to the lowest id.
std::uint8_t video_label_avg_probs(const PredictionLog& log);

std::uint8_t video_label(const PredictionLog& log, VideoStrategy strategy);

// Pair-sum compound prediction from basic-class scores: each compound is
// scored by the sum of its two basic probabilities, argmax wins, ties to the
// lowest compound id. Other never competes.
CompoundEmotion compound_from_basic(std::span<const double> basic_probs);
CompoundEmotion compound_from_basic(const ScoreVector& probs);

// Per-frame compound labels from a basic-class score log. Logits are
// softmax-normalized per frame before pair summing.
PredictionLog derive_compound_log(const PredictionLog& basic_log);

// Frame-based ensembling: at frame t every (model, frame) label inside
// [max(0, t-window+1), t] votes weight(model) times; the modal label wins
// and ties go to the lowest class id. Models missing from the weight map
// vote once.
std::vector<std::uint8_t> ensemble_frames(
    std::span<const PredictionLog> label_logs, const EnsembleSpec& spec);

// Drops every position whose ground truth is Other; predictions of Other at
// kept positions stay and score as errors.
struct FilteredPairs {
  std::vector<std::uint8_t> preds;
  std::vector<std::uint8_t> gts;
};
FilteredPairs exclude_other(std::span<const std::uint8_t> preds,
                            std::span<const std::uint8_t> gts);

}  // namespace cuecast
