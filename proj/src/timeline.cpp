#include "cuecast/timeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "cuecast/error.hpp"
#include "cuecast/io_util.hpp"

namespace cuecast {
namespace {

bool canonical_less(const Segment& a, const Segment& b) {
  if (a.video_id != b.video_id) return a.video_id < b.video_id;
  if (a.start_s != b.start_s) return a.start_s < b.start_s;
  if (a.end_s != b.end_s) return a.end_s < b.end_s;
  return a.label < b.label;
}

// Engine-agnostic Fisher-Yates so the permutation is identical on every
// platform (std::shuffle leaves the draw algorithm unspecified).
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace

std::vector<FrameWindow> build_windows(std::int64_t n_frames,
                                       const WindowSpec& spec) {
  if (spec.size <= 0 || spec.hop <= 0 || spec.hop > spec.size) {
    throw Error(ErrorCode::InvalidWindowSpec,
                "window spec requires 0 < hop <= size");
  }
  if (n_frames < 1) {
    throw Error(ErrorCode::InvalidWindowSpec, "n_frames must be >= 1");
  }
  std::vector<FrameWindow> windows;
  for (std::int64_t start = 0; start < n_frames; start += spec.hop) {
    const std::int64_t end = start + spec.size;  // exclusive
    if (end > n_frames && spec.policy == EdgePolicy::kRequireFull) continue;
    windows.push_back({start, std::min(end, n_frames) - 1});
  }
  return windows;
}

double audio_hop_seconds(double frame_rate) {
  if (!(frame_rate > 0.0) || !std::isfinite(frame_rate)) {
    throw Error(ErrorCode::NonPositiveRate,
                "frame rate must be positive, got " +
                    format_double(frame_rate));
  }
  return 1.0 / frame_rate;
}

std::vector<Segment> cut_segments(const SegmentTimeline& timeline,
                                  double frame_rate) {
  if (!(frame_rate > 0.0) || !std::isfinite(frame_rate)) {
    throw Error(ErrorCode::NonPositiveRate, "frame rate must be positive");
  }
  std::vector<Segment> segments;
  segments.reserve(timeline.entries.size());
  for (const auto& entry : timeline.entries) {
    Segment seg;
    seg.video_id = entry.video_id;
    seg.start_s = entry.start_s;
    seg.end_s = entry.end_s;
    seg.label = entry.label;
    seg.first_frame =
        static_cast<std::int64_t>(std::floor(entry.start_s * frame_rate));
    seg.last_frame =
        static_cast<std::int64_t>(std::ceil(entry.end_s * frame_rate)) - 1;

    // Timeline entries arrive sorted per video; a touching boundary that is
    // not frame-aligned would hand the boundary frame to both sides, so the
    // earlier segment keeps it.
    if (!segments.empty() && segments.back().video_id == seg.video_id) {
      seg.first_frame =
          std::max(seg.first_frame, segments.back().last_frame + 1);
    }
    if (seg.last_frame < seg.first_frame) {
      throw Error(ErrorCode::EmptySegment,
                  "segment " + seg.video_id + " [" +
                      format_double(seg.start_s) + "," +
                      format_double(seg.end_s) + ") spans no frame at " +
                      format_double(frame_rate) + " fps");
    }
    segments.push_back(std::move(seg));
  }
  return segments;
}

std::string segment_id(const std::vector<Segment>& segments,
                       std::size_t index) {
  const Segment& seg = segments[index];
  std::size_t ordinal = 0;
  for (std::size_t i = 0; i < index; ++i) {
    if (segments[i].video_id == seg.video_id) ++ordinal;
  }
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03zu", ordinal);
  return seg.video_id + "#" + buf;
}

FoldAssignment kfold_split(std::vector<Segment> segments, int k,
                           std::uint64_t seed) {
  if (k < 1) {
    throw Error(ErrorCode::TooFewSegments, "k must be >= 1");
  }
  if (segments.size() < static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::TooFewSegments,
                std::to_string(segments.size()) + " segments cannot fill " +
                    std::to_string(k) + " folds");
  }
  std::sort(segments.begin(), segments.end(), canonical_less);

  std::map<CompoundEmotion, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    by_label[segments[i].label].push_back(i);
  }

  FoldAssignment assignment;
  assignment.k = k;
  assignment.seed = seed;
  assignment.folds.assign(segments.size(), -1);

  std::mt19937_64 rng(seed);
  int offset = 0;  // rotates the starting fold so overall sizes stay level
  for (auto& [label, indices] : by_label) {
    deterministic_shuffle(indices, rng);
    for (std::size_t j = 0; j < indices.size(); ++j) {
      assignment.folds[indices[j]] = (offset + static_cast<int>(j)) % k;
    }
    offset = (offset + static_cast<int>(indices.size())) % k;
  }
  assignment.segments = std::move(segments);
  return assignment;
}

std::string serialize_folds(const FoldAssignment& assignment) {
  std::ostringstream out;
  out << "segment_id,fold\n";
  for (std::size_t i = 0; i < assignment.segments.size(); ++i) {
    out << segment_id(assignment.segments, i) << ',' << assignment.folds[i]
        << '\n';
  }
  return out.str();
}

}  // namespace cuecast
