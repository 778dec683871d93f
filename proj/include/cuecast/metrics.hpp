#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuecast/ingest.hpp"
#include "cuecast/taxonomy.hpp"
#include "cuecast/timeline.hpp"

namespace cuecast {

// One-vs-rest confusion counts over a class set. Counts from independent
// shards merge by element-wise addition.
struct ClassCounts {
  ClassSet class_set = ClassSet::kCompound;
  std::vector<std::int64_t> tp;
  std::vector<std::int64_t> fp;
  std::vector<std::int64_t> fn;

  std::int64_t support(std::size_t c) const { return tp[c] + fn[c]; }

  ClassCounts& merge(const ClassCounts& other);
};

ClassCounts confusion(std::span<const std::uint8_t> preds,
                      std::span<const std::uint8_t> gts, ClassSet class_set);

// 2PR/(P+R), defined as 0 whenever TP+FP, TP+FN, or P+R is 0.
double f1_per_class(const ClassCounts& counts, std::size_t c);

enum class Weighting : std::uint8_t { kAverage, kWeighted };

// F1 over the evaluated class set: all seven basic emotions, or the seven
// compounds with Other excluded. average_f1 weighs every class 1/C even
// when it is absent from the ground truth; weighted_f1 uses ground-truth
// support proportions and is empty when total support is zero.
struct F1Report {
  ClassSet class_set = ClassSet::kCompound;
  std::vector<std::uint8_t> class_ids;  // evaluated classes
  std::vector<double> f1;               // aligned with class_ids
  double average_f1 = 0.0;
  std::optional<double> weighted_f1;
  std::int64_t total_support = 0;
};

// weighting selects the aggregate the caller depends on: kWeighted raises
// ZeroSupport when the ground truth is empty, kAverage never fails.
F1Report f1_aggregate(const ClassCounts& counts, Weighting weighting);

// ---------------------------------------------------------------------------
// Distribution reporting.
// ---------------------------------------------------------------------------

struct DistributionRow {
  CompoundEmotion label = CompoundEmotion::kOther;
  std::int64_t count = 0;
  double total_duration_s = 0.0;
};

struct DistributionReport {
  std::vector<DistributionRow> rows;  // canonical class order, all 8 classes
  std::int64_t total_count = 0;
  double total_duration_s = 0.0;
};

DistributionReport distribution_report(std::span<const TimelineEntry> entries);
DistributionReport distribution_report(std::span<const Segment> segments);

// Human-readable table; durations rendered to 2 decimals.
std::string render_distribution(const DistributionReport& report);
std::string distribution_to_json(const DistributionReport& report);

// Mean and population standard deviation over per-fold scores.
struct FoldStats {
  double mean = 0.0;
  double stddev = 0.0;
};
FoldStats fold_mean_std(std::span<const double> fold_scores);

}  // namespace cuecast
