#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cuecast/ingest.hpp"

namespace cuecast {

// ---------------------------------------------------------------------------
// Sliding windows over frame ranges.
// ---------------------------------------------------------------------------

enum class EdgePolicy : std::uint8_t {
  kTruncateAtEdges,  // the final window(s) clip to the frame count
  kRequireFull,      // windows extending past the end are dropped
};

struct WindowSpec {
  std::int64_t size = 10;
  std::int64_t hop = 10;
  EdgePolicy policy = EdgePolicy::kTruncateAtEdges;
};

struct FrameWindow {
  std::int64_t first = 0;
  std::int64_t last = 0;  // inclusive

  friend bool operator==(const FrameWindow&, const FrameWindow&) = default;
};

// Windows start at every multiple of hop below n_frames. Under the truncate
// policy the union of windows covers [0, n_frames).
std::vector<FrameWindow> build_windows(std::int64_t n_frames,
                                       const WindowSpec& spec);

// Audio hop that aligns one audio feature step with one video frame.
double audio_hop_seconds(double frame_rate);

// ---------------------------------------------------------------------------
// Segments cut from an annotation timeline.
// ---------------------------------------------------------------------------

struct Segment {
  std::string video_id;
  double start_s = 0.0;
  double end_s = 0.0;
  CompoundEmotion label = CompoundEmotion::kOther;
  std::int64_t first_frame = 0;
  std::int64_t last_frame = 0;  // inclusive

  double duration_s() const { return end_s - start_s; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// One segment per timeline entry. Frame spans follow
// floor(start_s*fps)..ceil(end_s*fps)-1; when two touching segments land on
// the same boundary frame, that frame stays with the earlier segment.
std::vector<Segment> cut_segments(const SegmentTimeline& timeline,
                                  double frame_rate);

// Stable id for a segment: "<video_id>#NNN" where NNN counts segments of the
// video in start order.
std::string segment_id(const std::vector<Segment>& segments,
                       std::size_t index);

// ---------------------------------------------------------------------------
// Stratified k-fold assignment.
// ---------------------------------------------------------------------------

struct FoldAssignment {
  int k = 5;
  std::uint64_t seed = 0;
  std::vector<Segment> segments;  // canonical order
  std::vector<int> folds;         // fold index per segment, 0..k-1
};

// Deterministic under (seed, canonical segment order): segments are sorted
// canonically before the seeded shuffle, so input order never matters.
// Per-class fold counts differ by at most one.
FoldAssignment kfold_split(std::vector<Segment> segments, int k,
                           std::uint64_t seed);

std::string serialize_folds(const FoldAssignment& assignment);

}  // namespace cuecast
