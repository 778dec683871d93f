#include "cuecast/textualize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cuecast/error.hpp"

namespace cuecast {
namespace {

constexpr std::string_view kTranscriptCaption =
    "Speech transcription of the video : ";
constexpr std::string_view kAuCaption =
    "Facial Action Units activated during the video : ";
constexpr std::string_view kEmotionCaption =
    "Emotions predicted from visual modality: ";
constexpr std::string_view kToneCaption = "Characteristics of the prosody : ";
constexpr std::string_view kAvdCaption = "Audio emotional state : ";
constexpr std::string_view kLineSeparator = "; \n";
constexpr std::string_view kEmptySlot = "none";

std::string join_items(std::span<const std::string> items) {
  if (items.empty()) return std::string(kEmptySlot);
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out;
}

// score descending, then name ascending
void sort_by_score(std::vector<std::pair<std::string, double>>& items) {
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
}

const char* level_prefix(double score, double threshold) {
  return score >= threshold ? "High" : "Low";
}

}  // namespace

std::vector<std::pair<std::string, double>> max_over_window(
    const CueTable& table, const FrameWindow& window) {
  std::vector<double> maxima(table.cue_names.size(),
                             -std::numeric_limits<double>::infinity());
  bool any_row = false;
  for (const auto& row : table.rows) {
    if (row.frame < window.first) continue;
    if (row.frame > window.last) break;  // rows are frame-sorted
    any_row = true;
    for (std::size_t i = 0; i < maxima.size(); ++i) {
      maxima[i] = std::max(maxima[i], row.values[i]);
    }
  }
  if (!any_row) {
    throw Error(ErrorCode::EmptyWindow,
                "no cue rows in frames [" + std::to_string(window.first) +
                    "," + std::to_string(window.last) + "]");
  }
  std::vector<std::pair<std::string, double>> out;
  out.reserve(maxima.size());
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    out.emplace_back(table.cue_names[i], maxima[i]);
  }
  return out;
}

std::vector<std::string> summarize_au(const CueTable& au_table,
                                      const FrameWindow& window,
                                      const TextualizeConfig& cfg) {
  if (au_table.kind != CueKind::kAuIntensity) {
    throw Error(ErrorCode::WrongKind, "summarize_au needs an AU table");
  }
  const auto maxima = max_over_window(au_table, window);
  std::vector<std::string> active;
  for (const auto& [name, score] : maxima) {
    if (score >= cfg.au_threshold) active.push_back(name);
  }
  return active;
}

std::vector<std::string> top_emotions(
    std::span<const std::pair<std::string, double>> scores, std::size_t k) {
  if (scores.size() < k) {
    throw Error(ErrorCode::TooFewClasses,
                "top-" + std::to_string(k) + " of " +
                    std::to_string(scores.size()) + " emotion scores");
  }
  std::vector<std::pair<std::string, double>> sorted(scores.begin(),
                                                     scores.end());
  for (const auto& [name, score] : sorted) {
    if (!std::isfinite(score)) {
      throw Error(ErrorCode::NonFiniteInput,
                  "non-finite emotion score for '" + name + "'");
    }
  }
  sort_by_score(sorted);
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) names.push_back(sorted[i].first);
  return names;
}

std::vector<std::string> tone_description(
    std::span<const std::pair<std::string, double>> tone_scores,
    const TextualizeConfig& cfg) {
  if (tone_scores.empty()) {
    throw Error(ErrorCode::EmptyTones, "no tone scores");
  }
  std::vector<std::pair<std::string, double>> sorted(tone_scores.begin(),
                                                     tone_scores.end());
  sort_by_score(sorted);
  const std::size_t take = std::min(cfg.tone_top_k, sorted.size());
  std::vector<std::string> items;
  items.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    items.push_back(std::string(level_prefix(sorted[i].second,
                                             cfg.tone_threshold)) +
                    " " + sorted[i].first);
  }
  return items;
}

std::string avd_description(double arousal, double valence, double dominance,
                            const TextualizeConfig& cfg) {
  for (double v : {arousal, valence, dominance}) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw Error(ErrorCode::OutOfRange,
                  "avd scores must lie in [0,1]");
    }
  }
  std::string out;
  out += level_prefix(arousal, cfg.avd_threshold);
  out += " arousal, ";
  out += level_prefix(valence, cfg.avd_threshold);
  out += " valence, ";
  out += level_prefix(dominance, cfg.avd_threshold);
  out += " dominance";
  return out;
}

std::string au_item_text(const std::string& au_code, AuNameStyle style) {
  const std::string name = au_display_name(au_code);
  switch (style) {
    case AuNameStyle::kCode:
      return au_code;
    case AuNameStyle::kName:
      return name.empty() ? au_code : name;
    case AuNameStyle::kCodeAndName:
      return name.empty() ? au_code : au_code + " (" + name + ")";
  }
  return au_code;
}

PromptRecord assemble_prompt(std::string video_id, std::int64_t frame_index,
                             const std::string& transcription,
                             std::span<const std::string> au_items,
                             std::span<const std::string> emotion_names,
                             std::span<const std::string> tone_items,
                             const std::string& avd_text) {
  PromptRecord record;
  record.video_id = std::move(video_id);
  record.frame_index = frame_index;
  record.transcription =
      transcription.empty() ? std::string(kEmptySlot) : transcription;
  record.au_text = join_items(au_items);
  record.emotions_text = join_items(emotion_names);
  record.tone_text = join_items(tone_items);
  record.avd_text = avd_text.empty() ? std::string(kEmptySlot) : avd_text;

  std::string rendered;
  rendered += kTranscriptCaption;
  rendered += record.transcription;
  rendered += kLineSeparator;
  rendered += kAuCaption;
  rendered += record.au_text;
  rendered += kLineSeparator;
  rendered += kEmotionCaption;
  rendered += record.emotions_text;
  rendered += kLineSeparator;
  rendered += kToneCaption;
  rendered += record.tone_text;
  rendered += kLineSeparator;
  rendered += kAvdCaption;
  rendered += record.avd_text;
  record.rendered = std::move(rendered);
  return record;
}

PromptRecord textualize_window(const CueBundle& cues,
                               const std::string& video_id,
                               const FrameWindow& window,
                               const std::string& transcription,
                               const TextualizeConfig& cfg) {
  auto window_maxima = [&](const CueTable* table)
      -> std::optional<std::vector<std::pair<std::string, double>>> {
    if (table == nullptr) return std::nullopt;
    try {
      return max_over_window(*table, window);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::EmptyWindow) return std::nullopt;
      throw;
    }
  };

  std::vector<std::string> au_items;
  if (cues.au != nullptr) {
    try {
      for (const auto& code : summarize_au(*cues.au, window, cfg)) {
        au_items.push_back(au_item_text(code, cfg.au_name_style));
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptyWindow) throw;
    }
  }

  std::vector<std::string> emotion_names;
  if (const auto maxima = window_maxima(cues.emotions)) {
    emotion_names = top_emotions(*maxima, cfg.emotion_top_k);
  }

  std::vector<std::string> tone_items;
  if (const auto maxima = window_maxima(cues.tone)) {
    tone_items = tone_description(*maxima, cfg);
  }

  std::string avd_text;
  if (const auto maxima = window_maxima(cues.avd)) {
    // canonical column order is arousal, valence, dominance
    avd_text = avd_description((*maxima)[0].second, (*maxima)[1].second,
                               (*maxima)[2].second, cfg);
  }

  return assemble_prompt(video_id, window.first, transcription, au_items,
                         emotion_names, tone_items, avd_text);
}

std::string serialize_prompt_records(std::span<const PromptRecord> records) {
  std::ostringstream out;
  for (const auto& record : records) {
    nlohmann::json line;
    line["video_id"] = record.video_id;
    line["frame"] = record.frame_index;
    line["transcription"] = record.transcription;
    line["au_text"] = record.au_text;
    line["emotions_text"] = record.emotions_text;
    line["tone_text"] = record.tone_text;
    line["avd_text"] = record.avd_text;
    line["rendered"] = record.rendered;
    out << line.dump() << '\n';
  }
  return out.str();
}

}  // namespace cuecast
