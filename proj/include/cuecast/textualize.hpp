#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cuecast/ingest.hpp"
#include "cuecast/timeline.hpp"

namespace cuecast {

enum class AuNameStyle : std::uint8_t {
  kCode,         // "AU06"
  kName,         // "Cheek raiser"
  kCodeAndName,  // "AU06 (Cheek raiser)"
};

struct TextualizeConfig {
  double au_threshold = 0.5;
  double tone_threshold = 0.5;
  double avd_threshold = 0.5;
  std::size_t tone_top_k = 10;
  std::size_t emotion_top_k = 3;
  AuNameStyle au_name_style = AuNameStyle::kCodeAndName;
  WindowSpec window{10, 10, EdgePolicy::kTruncateAtEdges};
};

struct PromptRecord {
  std::string video_id;
  std::int64_t frame_index = 0;
  std::string transcription;
  std::string au_text;
  std::string emotions_text;
  std::string tone_text;
  std::string avd_text;
  std::string rendered;

  friend bool operator==(const PromptRecord&, const PromptRecord&) = default;
};

// Per-cue maximum over the rows whose frame lies in [window.first,
// window.last]. Errors with EmptyWindow when no row falls inside.
std::vector<std::pair<std::string, double>> max_over_window(
    const CueTable& table, const FrameWindow& window);

// AU codes whose max-over-window intensity reaches au_threshold, in
// canonical AU order.
std::vector<std::string> summarize_au(const CueTable& au_table,
                                      const FrameWindow& window,
                                      const TextualizeConfig& cfg);

// The k highest-scoring names; equal scores order alphabetically.
std::vector<std::string> top_emotions(
    std::span<const std::pair<std::string, double>> scores, std::size_t k);

// "High <name>" / "Low <name>" for the top tone_top_k cues (all of them if
// fewer exist). High iff score >= tone_threshold.
std::vector<std::string> tone_description(
    std::span<const std::pair<std::string, double>> tone_scores,
    const TextualizeConfig& cfg);

// "<P> arousal, <P> valence, <P> dominance" with High iff score >=
// avd_threshold.
std::string avd_description(double arousal, double valence, double dominance,
                            const TextualizeConfig& cfg);

std::string au_item_text(const std::string& au_code, AuNameStyle style);

// Renders the five-line prompt. Empty parts become "none"; the rendered
// string is byte-deterministic.
PromptRecord assemble_prompt(std::string video_id, std::int64_t frame_index,
                             const std::string& transcription,
                             std::span<const std::string> au_items,
                             std::span<const std::string> emotion_names,
                             std::span<const std::string> tone_items,
                             const std::string& avd_text);

// Cue tables feeding one video's prompts; absent tables render as "none".
struct CueBundle {
  const CueTable* au = nullptr;
  const CueTable* emotions = nullptr;
  const CueTable* tone = nullptr;
  const CueTable* avd = nullptr;
};

// One prompt for the window anchored at window.first. Cues with no rows in
// the window render "none" rather than failing.
PromptRecord textualize_window(const CueBundle& cues,
                               const std::string& video_id,
                               const FrameWindow& window,
                               const std::string& transcription,
                               const TextualizeConfig& cfg);

std::string serialize_prompt_records(std::span<const PromptRecord> records);

}  // namespace cuecast
