#include "cuecast/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "cuecast/error.hpp"

namespace cuecast {
namespace {

std::string two_decimals(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::vector<std::uint8_t> evaluated_ids(ClassSet set) {
  std::vector<std::uint8_t> ids;
  if (set == ClassSet::kBasic) {
    for (std::size_t c = 0; c < kBasicCount; ++c) {
      ids.push_back(static_cast<std::uint8_t>(c));
    }
  } else {
    for (CompoundEmotion c : evaluated_compounds()) {
      ids.push_back(static_cast<std::uint8_t>(c));
    }
  }
  return ids;
}

}  // namespace

ClassCounts& ClassCounts::merge(const ClassCounts& other) {
  if (other.class_set != class_set || other.tp.size() != tp.size()) {
    throw Error(ErrorCode::MixedClassSets,
                "cannot merge counts over different class sets");
  }
  for (std::size_t c = 0; c < tp.size(); ++c) {
    tp[c] += other.tp[c];
    fp[c] += other.fp[c];
    fn[c] += other.fn[c];
  }
  return *this;
}

ClassCounts confusion(std::span<const std::uint8_t> preds,
                      std::span<const std::uint8_t> gts, ClassSet class_set) {
  if (preds.size() != gts.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "prediction and ground-truth sequences differ in length");
  }
  const std::size_t n_classes = class_count(class_set);
  ClassCounts counts;
  counts.class_set = class_set;
  counts.tp.assign(n_classes, 0);
  counts.fp.assign(n_classes, 0);
  counts.fn.assign(n_classes, 0);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i] >= n_classes || gts[i] >= n_classes) {
      throw Error(ErrorCode::UnknownLabel,
                  "label id out of range at position " + std::to_string(i));
    }
    if (preds[i] == gts[i]) {
      ++counts.tp[preds[i]];
    } else {
      ++counts.fp[preds[i]];
      ++counts.fn[gts[i]];
    }
  }
  return counts;
}

double f1_per_class(const ClassCounts& counts, std::size_t c) {
  const double tp = static_cast<double>(counts.tp[c]);
  const double fp = static_cast<double>(counts.fp[c]);
  const double fn = static_cast<double>(counts.fn[c]);
  if (tp + fp == 0.0 || tp + fn == 0.0) return 0.0;
  const double precision = tp / (tp + fp);
  const double recall = tp / (tp + fn);
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

F1Report f1_aggregate(const ClassCounts& counts, Weighting weighting) {
  F1Report report;
  report.class_set = counts.class_set;
  report.class_ids = evaluated_ids(counts.class_set);

  std::int64_t total_support = 0;
  for (std::uint8_t id : report.class_ids) {
    total_support += counts.support(id);
  }
  report.total_support = total_support;
  if (weighting == Weighting::kWeighted && total_support == 0) {
    throw Error(ErrorCode::ZeroSupport,
                "weighted F1 over an empty ground truth");
  }

  const double uniform_weight =
      1.0 / static_cast<double>(report.class_ids.size());
  double average = 0.0;
  double weighted = 0.0;
  for (std::uint8_t id : report.class_ids) {
    const double f1 = f1_per_class(counts, id);
    report.f1.push_back(f1);
    average += uniform_weight * f1;
    if (total_support > 0) {
      weighted += f1 * static_cast<double>(counts.support(id)) /
                  static_cast<double>(total_support);
    }
  }
  report.average_f1 = average;
  if (total_support > 0) report.weighted_f1 = weighted;
  return report;
}

namespace {

DistributionReport empty_report() {
  DistributionReport report;
  report.rows.resize(kCompoundCount);
  for (std::size_t c = 0; c < kCompoundCount; ++c) {
    report.rows[c].label = static_cast<CompoundEmotion>(c);
  }
  return report;
}

void add_to_report(DistributionReport& report, CompoundEmotion label,
                   double duration_s) {
  auto& row = report.rows[static_cast<std::size_t>(label)];
  row.count += 1;
  row.total_duration_s += duration_s;
  report.total_count += 1;
  report.total_duration_s += duration_s;
}

}  // namespace

DistributionReport distribution_report(std::span<const TimelineEntry> entries) {
  DistributionReport report = empty_report();
  for (const auto& entry : entries) {
    add_to_report(report, entry.label, entry.end_s - entry.start_s);
  }
  return report;
}

DistributionReport distribution_report(std::span<const Segment> segments) {
  DistributionReport report = empty_report();
  for (const auto& segment : segments) {
    add_to_report(report, segment.label, segment.duration_s());
  }
  return report;
}

std::string render_distribution(const DistributionReport& report) {
  std::ostringstream out;
  out << "class,segments,total_duration_s\n";
  for (const auto& row : report.rows) {
    out << compound_name(row.label) << ',' << row.count << ','
        << two_decimals(row.total_duration_s) << '\n';
  }
  out << "Total," << report.total_count << ','
      << two_decimals(report.total_duration_s) << '\n';
  return out.str();
}

std::string distribution_to_json(const DistributionReport& report) {
  nlohmann::json doc;
  doc["classes"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json item;
    item["class"] = std::string(compound_name(row.label));
    item["segments"] = row.count;
    item["total_duration_s"] = two_decimals(row.total_duration_s);
    doc["classes"].push_back(item);
  }
  doc["total_segments"] = report.total_count;
  doc["total_duration_s"] = two_decimals(report.total_duration_s);
  return doc.dump(2) + "\n";
}

FoldStats fold_mean_std(std::span<const double> fold_scores) {
  if (fold_scores.empty()) {
    throw Error(ErrorCode::EmptyInput, "no fold scores");
  }
  double mean = 0.0;
  for (double v : fold_scores) mean += v;
  mean /= static_cast<double>(fold_scores.size());
  double var = 0.0;
  for (double v : fold_scores) var += (v - mean) * (v - mean);
  var /= static_cast<double>(fold_scores.size());
  return {mean, std::sqrt(var)};
}

}  // namespace cuecast
