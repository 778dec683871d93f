#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cuecast/error.hpp"
#include "cuecast/ingest.hpp"
#include "cuecast/textualize.hpp"

using namespace cuecast;

namespace {

CueTable au_table(const std::string& rows) {
  std::string header = "frame";
  for (const auto& au : default_au_set()) header += "," + au;
  std::istringstream csv(header + "\n" + rows);
  return parse_cue_table(csv, CueKind::kAuIntensity);
}

std::string au_row(int frame, double au06, double rest) {
  std::string row = std::to_string(frame);
  for (const auto& au : default_au_set()) {
    row += "," + std::to_string(au == "AU06" ? au06 : rest);
  }
  return row + "\n";
}

using Scores = std::vector<std::pair<std::string, double>>;

}  // namespace

TEST_SUITE_BEGIN("textualize");

TEST_CASE("max over window picks the per-cue maximum of covered rows") {
  std::istringstream csv("frame,a,b\n0,0.1,0.9\n5,0.8,0.2\n12,1.0,1.0\n");
  const auto table = parse_cue_table(csv, CueKind::kTone);
  const auto maxima = max_over_window(table, {0, 9});
  CHECK(maxima == Scores{{"a", 0.8}, {"b", 0.9}});
  CHECK_THROWS_AS(max_over_window(table, {6, 9}), Error);  // no rows inside
}

TEST_CASE("AU summaries activate at the threshold, in canonical order") {
  const auto table = au_table(au_row(0, 0.5, 0.4999));
  TextualizeConfig cfg;
  const auto active = summarize_au(table, {0, 9}, cfg);
  CHECK(active == std::vector<std::string>{"AU06"});

  cfg.au_threshold = 0.4999;
  const auto all = summarize_au(table, {0, 9}, cfg);
  CHECK(all.size() == 20);
  CHECK(all.front() == "AU01");
  CHECK(all.back() == "AU43");
}

TEST_CASE("raising the AU threshold only shrinks the active set") {
  const auto table = au_table(au_row(0, 0.9, 0.3) + au_row(1, 0.2, 0.55));
  TextualizeConfig cfg;
  std::vector<std::string> previous;
  bool first = true;
  for (double threshold : {0.0, 0.2, 0.4, 0.55, 0.7, 1.0}) {
    cfg.au_threshold = threshold;
    const auto active = summarize_au(table, {0, 9}, cfg);
    if (!first) {
      for (const auto& au : active) {
        CHECK(std::find(previous.begin(), previous.end(), au) !=
              previous.end());
      }
      CHECK(active.size() <= previous.size());
    }
    previous = active;
    first = false;
  }
}

TEST_CASE("top emotions sort by score, then alphabetically") {
  const Scores scores{{"surprise", 0.3}, {"joy", 0.5},     {"anger", 0.1},
                      {"fear", 0.3},     {"neutral", 0.05}};
  CHECK(top_emotions(scores, 3) ==
        std::vector<std::string>{"joy", "fear", "surprise"});
  CHECK(top_emotions(scores, 5).size() == 5);
  CHECK_THROWS_AS(top_emotions(scores, 6), Error);
  const Scores bad{{"joy", std::nan("")}};
  CHECK_THROWS_AS(top_emotions(bad, 1), Error);
}

TEST_CASE("tone descriptions mark High at the threshold and keep top-k") {
  TextualizeConfig cfg;
  const Scores scores{{"confusion", 0.5}, {"anxiety", 0.5}, {"boredom", 0.4}};
  CHECK(tone_description(scores, cfg) ==
        std::vector<std::string>{"High anxiety", "High confusion",
                                 "Low boredom"});
  cfg.tone_top_k = 2;
  CHECK(tone_description(scores, cfg) ==
        std::vector<std::string>{"High anxiety", "High confusion"});
  CHECK_THROWS_AS(tone_description(Scores{}, cfg), Error);
}

TEST_CASE("avd text spells the three dimensions in fixed order") {
  TextualizeConfig cfg;
  CHECK(avd_description(0.7, 0.2, 0.4, cfg) ==
        "High arousal, Low valence, Low dominance");
  CHECK(avd_description(0.5, 0.5, 0.5, cfg) ==
        "High arousal, High valence, High dominance");
  CHECK_THROWS_AS(avd_description(1.5, 0.0, 0.0, cfg), Error);
  CHECK_THROWS_AS(avd_description(std::nan(""), 0.0, 0.0, cfg), Error);
}

TEST_CASE("AU items render in all three styles") {
  CHECK(au_item_text("AU06", AuNameStyle::kCode) == "AU06");
  CHECK(au_item_text("AU06", AuNameStyle::kName) == "Cheek raiser");
  CHECK(au_item_text("AU06", AuNameStyle::kCodeAndName) ==
        "AU06 (Cheek raiser)");
}

TEST_CASE("the assembled prompt matches the template byte for byte") {
  const std::vector<std::string> au_items{"AU06 (Cheek raiser)",
                                          "AU12 (Lip corner puller)"};
  const std::vector<std::string> emotions{"joy", "surprise", "neutral"};
  const std::vector<std::string> tones{"High amusement"};
  const auto record =
      assemble_prompt("v1", 0, "OK", au_items, emotions, tones,
                      "High arousal, Low valence, Low dominance");
  CHECK(record.rendered ==
        "Speech transcription of the video : OK; \n"
        "Facial Action Units activated during the video : AU06 (Cheek "
        "raiser), AU12 (Lip corner puller); \n"
        "Emotions predicted from visual modality: joy, surprise, neutral; \n"
        "Characteristics of the prosody : High amusement; \n"
        "Audio emotional state : High arousal, Low valence, Low dominance");
}

TEST_CASE("empty prompt slots render as none") {
  const auto record = assemble_prompt("v1", 3, "", {}, {}, {}, "");
  CHECK(record.rendered ==
        "Speech transcription of the video : none; \n"
        "Facial Action Units activated during the video : none; \n"
        "Emotions predicted from visual modality: none; \n"
        "Characteristics of the prosody : none; \n"
        "Audio emotional state : none");
  CHECK(record.transcription == "none");
  CHECK(record.au_text == "none");
  CHECK(record.frame_index == 3);
}

TEST_CASE("prompts end without a trailing separator") {
  const auto record = assemble_prompt("v1", 0, "hi", {}, {}, {}, "x");
  CHECK(record.rendered.back() == 'x');
  std::size_t separators = 0;
  std::string::size_type pos = 0;
  while ((pos = record.rendered.find("; \n", pos)) != std::string::npos) {
    ++separators;
    pos += 3;
  }
  CHECK(separators == 4);
}

TEST_CASE("textualize_window uses the window anchor and tolerates gaps") {
  const auto au = au_table(au_row(0, 0.9, 0.1));
  CueBundle bundle;
  bundle.au = &au;
  TextualizeConfig cfg;
  const auto record = textualize_window(bundle, "v1", {0, 9}, "words", cfg);
  CHECK(record.video_id == "v1");
  CHECK(record.frame_index == 0);
  CHECK(record.au_text == "AU06 (Cheek raiser)");
  CHECK(record.emotions_text == "none");
  CHECK(record.tone_text == "none");
  CHECK(record.avd_text == "none");

  // A window past the last AU row falls back to "none" instead of failing.
  const auto later = textualize_window(bundle, "v1", {5, 9}, "words", cfg);
  CHECK(later.au_text == "none");
  CHECK(later.frame_index == 5);
}

TEST_CASE("serialized prompt records form one JSON object per line") {
  const auto a = assemble_prompt("v1", 0, "x", {}, {}, {}, "");
  const auto b = assemble_prompt("v1", 10, "y", {}, {}, {}, "");
  const auto text = serialize_prompt_records(std::vector<PromptRecord>{a, b});
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find("\"frame\":0") != std::string::npos);
  CHECK(text.find("\"frame\":10") != std::string::npos);
  CHECK(text.find("\"video_id\":\"v1\"") != std::string::npos);
}

TEST_SUITE_END();
