#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cuecast/score_vector.hpp"
#include "cuecast/taxonomy.hpp"

namespace cuecast {

// ---------------------------------------------------------------------------
// Cue tables: per-frame numeric scores keyed by cue name.
//
// CSV grammar: header `frame,<cue1>,...,<cueK>`, comma separator, '.' decimal
// point, UTF-8, no quoting. Frame indices must be strictly increasing.
// ---------------------------------------------------------------------------

enum class CueKind : std::uint8_t {
  kAuIntensity,   // exactly 20 zero-padded AU columns, scores in [0,1]
  kTone,          // opaque cue names, any finite score
  kAvd,           // exactly arousal,valence,dominance, scores in [0,1]
  kEmotionProb,   // columns resolve to basic emotions, scores in [0,1]
};

struct CueRow {
  std::int64_t frame = 0;
  std::vector<double> values;  // aligned with CueTable::cue_names

  friend bool operator==(const CueRow&, const CueRow&) = default;
};

struct CueTable {
  std::string video_id;
  double frame_rate = 25.0;
  CueKind kind = CueKind::kTone;
  std::vector<std::string> cue_names;  // canonical order (see parse_cue_table)
  std::vector<CueRow> rows;

  friend bool operator==(const CueTable&, const CueTable&) = default;
};

// Parses and validates a cue CSV. Columns are canonicalized: AU columns sort
// by AU number, emotion columns resolve to canonical basic names in id
// order, AVD becomes arousal,valence,dominance, tone names sort
// alphabetically. Row order is preserved.
CueTable parse_cue_table(std::istream& stream, CueKind kind,
                         std::string video_id = "video",
                         double frame_rate = 25.0);

std::string serialize_cue_table(const CueTable& table);

// The default 20-AU vocabulary (ascending AU number) with FACS names.
const std::vector<std::string>& default_au_set();
std::string au_display_name(const std::string& au_code);

// ---------------------------------------------------------------------------
// Annotation timelines: labeled (video, start, end) intervals.
//
// CSV grammar: header `video_id,start_s,end_s,label`. Entries are sorted by
// (video_id, start_s) at parse; overlapping entries within one video are
// rejected.
// ---------------------------------------------------------------------------

struct TimelineEntry {
  std::string video_id;
  double start_s = 0.0;
  double end_s = 0.0;
  CompoundEmotion label = CompoundEmotion::kOther;

  double duration_s() const { return end_s - start_s; }

  friend bool operator==(const TimelineEntry&, const TimelineEntry&) = default;
};

struct SegmentTimeline {
  std::vector<TimelineEntry> entries;  // canonical (video_id, start_s) order

  friend bool operator==(const SegmentTimeline&,
                         const SegmentTimeline&) = default;
};

SegmentTimeline parse_timeline(std::istream& stream);
std::string serialize_timeline(const SegmentTimeline& timeline);

// ---------------------------------------------------------------------------
// Prediction logs: one model's per-frame output over a class set.
//
// JSON-lines. First line is a header object
//   {"model_id":..., "video_id":..., "frame_rate":..., "class_set":"basic"|"compound"}
// followed by one object per frame, either
//   {"frame": t, "kind": "logits"|"probabilities", "values": [...]}
// or
//   {"frame": t, "kind": "label", "label": "<class name>"}.
// Frames must be contiguous from 0 and all share one kind.
// ---------------------------------------------------------------------------

enum class LogKind : std::uint8_t { kLabels, kLogits, kProbabilities };

struct PredictionLog {
  std::string model_id;
  std::string video_id;
  double frame_rate = 25.0;
  ClassSet class_set = ClassSet::kBasic;
  LogKind kind = LogKind::kLabels;
  std::vector<std::uint8_t> labels;        // kind == kLabels
  std::vector<std::vector<double>> scores; // kind == kLogits | kProbabilities

  std::size_t frame_count() const {
    return kind == LogKind::kLabels ? labels.size() : scores.size();
  }

  friend bool operator==(const PredictionLog&, const PredictionLog&) = default;
};

PredictionLog parse_predictions(std::istream& stream);
std::string serialize_predictions(const PredictionLog& log);

// Class-id <-> name helpers over either taxonomy.
std::string_view class_name(ClassSet set, std::uint8_t id);
std::uint8_t parse_class_label(ClassSet set, std::string_view name);

// Whole-video transcript: file content with line breaks flattened to single
// spaces and surrounding whitespace trimmed.
std::string read_transcript(std::istream& stream);

}  // namespace cuecast
