#include "cuecast/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuecast/aggregate.hpp"
#include "cuecast/error.hpp"
#include "cuecast/ingest.hpp"
#include "cuecast/io_util.hpp"
#include "cuecast/metrics.hpp"
#include "cuecast/parallel.hpp"
#include "cuecast/textualize.hpp"
#include "cuecast/timeline.hpp"

namespace cuecast {
namespace {

namespace fs = std::filesystem;

std::string error_record(std::string_view code, std::string_view message,
                         std::optional<std::size_t> line = {}) {
  nlohmann::json record;
  record["error"] = std::string(code);
  record["message"] = std::string(message);
  if (line) record["line"] = *line;
  return record.dump() + "\n";
}

std::ifstream open_input(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream.is_open()) {
    throw Error(ErrorCode::IoError, "cannot open " + path);
  }
  return stream;
}

void write_output(const fs::path& dir, const std::string& name,
                  std::string_view content) {
  fs::create_directories(dir);
  write_file_atomic(dir / name, content);
}

PredictionLog load_predictions(const std::string& path) {
  auto stream = open_input(path);
  try {
    return parse_predictions(stream);
  } catch (const Error& e) {
    if (e.line()) throw Error(e.code(), path + ": " + e.what(), *e.line());
    throw Error(e.code(), path + ": " + std::string(e.what()));
  }
}

// ---------------------------------------------------------------------------
// textualize
// ---------------------------------------------------------------------------

struct TextualizeArgs {
  std::string au_path;
  std::string emotions_path;
  std::string tone_path;
  std::string avd_path;
  std::string transcript_path;
  std::string video_id = "video";
  double fps = 25.0;
  TextualizeConfig cfg;
  std::string out_dir;
};

int run_textualize(const TextualizeArgs& a) {
  auto load = [&](const std::string& path,
                  CueKind kind) -> std::optional<CueTable> {
    if (path.empty()) return std::nullopt;
    auto stream = open_input(path);
    return parse_cue_table(stream, kind, a.video_id, a.fps);
  };
  const auto au = load(a.au_path, CueKind::kAuIntensity);
  const auto emotions = load(a.emotions_path, CueKind::kEmotionProb);
  const auto tone = load(a.tone_path, CueKind::kTone);
  const auto avd = load(a.avd_path, CueKind::kAvd);
  if (!au && !emotions && !tone && !avd) {
    throw Error(ErrorCode::UsageError,
                "at least one cue table (--au, --emotions, --tone, --avd) "
                "is required");
  }

  std::string transcription;
  if (!a.transcript_path.empty()) {
    auto stream = open_input(a.transcript_path);
    transcription = read_transcript(stream);
  }

  std::int64_t n_frames = 0;
  for (const auto* table : {&au, &emotions, &tone, &avd}) {
    if (*table && !(*table)->rows.empty()) {
      n_frames = std::max(n_frames, (*table)->rows.back().frame + 1);
    }
  }
  if (n_frames == 0) {
    throw Error(ErrorCode::EmptyInput, "the cue tables contain no frames");
  }

  const auto windows = build_windows(n_frames, a.cfg.window);
  const CueBundle bundle{au ? &*au : nullptr, emotions ? &*emotions : nullptr,
                         tone ? &*tone : nullptr, avd ? &*avd : nullptr};
  const auto records = parallel_map(windows.size(), [&](std::size_t i) {
    return textualize_window(bundle, a.video_id, windows[i], transcription,
                             a.cfg);
  });
  write_output(a.out_dir, "prompts.jsonl", serialize_prompt_records(records));
  return 0;
}

// ---------------------------------------------------------------------------
// segment / split
// ---------------------------------------------------------------------------

struct SegmentArgs {
  std::string timeline_path;
  double fps = 25.0;
  std::string out_dir;
};

int run_segment(const SegmentArgs& a) {
  auto stream = open_input(a.timeline_path);
  const auto timeline = parse_timeline(stream);
  const auto segments = cut_segments(timeline, a.fps);
  std::ostringstream csv;
  csv << "segment_id,video_id,start_s,end_s,label,first_frame,last_frame\n";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    csv << segment_id(segments, i) << ',' << s.video_id << ','
        << format_double(s.start_s) << ',' << format_double(s.end_s) << ','
        << compound_name(s.label) << ',' << s.first_frame << ','
        << s.last_frame << '\n';
  }
  write_output(a.out_dir, "segments.csv", csv.str());
  return 0;
}

struct SplitArgs {
  std::string timeline_path;
  double fps = 25.0;
  int k = 5;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int run_split(const SplitArgs& a) {
  auto stream = open_input(a.timeline_path);
  const auto timeline = parse_timeline(stream);
  auto segments = cut_segments(timeline, a.fps);
  const auto assignment = kfold_split(std::move(segments), a.k, a.seed);
  write_output(a.out_dir, "folds.csv", serialize_folds(assignment));
  return 0;
}

// ---------------------------------------------------------------------------
// aggregate
// ---------------------------------------------------------------------------

struct AggregateArgs {
  std::vector<std::string> pred_paths;
  VideoStrategy strategy = VideoStrategy::kMajority;
  bool strategy_given = false;
  bool derive_compound = false;
  std::string out_dir;
};

int run_aggregate(const AggregateArgs& a) {
  if (a.derive_compound && a.strategy_given) {
    throw Error(ErrorCode::UsageError,
                "--derive-compound and --strategy are mutually exclusive");
  }
  if (a.derive_compound) {
    if (a.pred_paths.size() != 1) {
      throw Error(ErrorCode::UsageError,
                  "--derive-compound takes exactly one --pred log");
    }
    const auto log = load_predictions(a.pred_paths.front());
    write_output(a.out_dir, "compound.jsonl",
                 serialize_predictions(derive_compound_log(log)));
    return 0;
  }
  std::ostringstream lines;
  for (const auto& path : a.pred_paths) {
    const auto log = load_predictions(path);
    const std::uint8_t label = video_label(log, a.strategy);
    nlohmann::json line;
    line["class_set"] = std::string(class_set_name(log.class_set));
    line["label"] = std::string(class_name(log.class_set, label));
    line["video_id"] = log.video_id;
    lines << line.dump() << '\n';
  }
  write_output(a.out_dir, "video_labels.jsonl", lines.str());
  return 0;
}

// ---------------------------------------------------------------------------
// ensemble
// ---------------------------------------------------------------------------

struct EnsembleArgs {
  std::vector<std::string> pred_paths;
  std::string weights_text;
  std::int64_t window = 10;
  std::string out_dir;
};

std::map<std::string, int> parse_weights_flag(const std::string& text) {
  std::map<std::string, int> weights;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto len = comma == std::string::npos ? std::string::npos
                                                : comma - pos;
    const std::string item = text.substr(pos, len);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::UsageError,
                  "--weights items look like model=k, got '" + item + "'");
    }
    const auto value = parse_int_strict(std::string_view(item).substr(eq + 1));
    if (!value || *value < 1) {
      throw Error(ErrorCode::UsageError,
                  "--weights values must be positive integers, got '" + item +
                      "'");
    }
    const std::string name = item.substr(0, eq);
    if (!weights.emplace(name, static_cast<int>(*value)).second) {
      throw Error(ErrorCode::UsageError,
                  "duplicate model '" + name + "' in --weights");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return weights;
}

int run_ensemble(const EnsembleArgs& a) {
  std::vector<PredictionLog> logs;
  logs.reserve(a.pred_paths.size());
  for (const auto& path : a.pred_paths) logs.push_back(load_predictions(path));

  EnsembleSpec spec;
  spec.window = a.window;
  if (!a.weights_text.empty()) spec.weights = parse_weights_flag(a.weights_text);

  PredictionLog out_log;
  out_log.model_id = "ensemble";
  out_log.video_id = logs.front().video_id;
  out_log.frame_rate = logs.front().frame_rate;
  out_log.class_set = logs.front().class_set;
  out_log.kind = LogKind::kLabels;
  out_log.labels = ensemble_frames(logs, spec);
  write_output(a.out_dir, "ensemble.jsonl", serialize_predictions(out_log));
  return 0;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvaluateArgs {
  std::vector<std::string> pred_paths;  // frame level: label logs
  std::vector<std::string> gt_paths;    // frame level: label logs
  std::string pred_videos_path;         // video level: video-label JSONL
  std::string gt_videos_path;           // video level: video-label JSONL
  std::string gt_timeline_path;         // video level: timeline CSV
  bool exclude_other = false;
  std::string out_dir;
};

struct VideoLabelRow {
  std::string video_id;
  ClassSet set = ClassSet::kCompound;
  std::uint8_t label = 0;
};

std::vector<VideoLabelRow> parse_video_labels(std::istream& stream,
                                              const std::string& path) {
  std::vector<VideoLabelRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::SchemaError, path + ": bad JSON: " + e.what(),
                  line_no);
    }
    const bool shaped = doc.is_object() && doc.contains("video_id") &&
                        doc["video_id"].is_string() && doc.contains("label") &&
                        doc["label"].is_string() && doc.contains("class_set") &&
                        doc["class_set"].is_string();
    if (!shaped) {
      throw Error(ErrorCode::SchemaError,
                  path + ": video-label lines need string fields video_id, "
                         "label, class_set",
                  line_no);
    }
    VideoLabelRow row;
    row.video_id = doc["video_id"].get<std::string>();
    row.set = parse_class_set(doc["class_set"].get<std::string>());
    row.label = parse_class_label(row.set, doc["label"].get<std::string>());
    rows.push_back(std::move(row));
  }
  return rows;
}

// One video's aligned label sequences.
struct EvalPairs {
  std::vector<std::uint8_t> preds;
  std::vector<std::uint8_t> gts;
};

void require_label_log(const PredictionLog& log, const std::string& role) {
  if (log.kind != LogKind::kLabels) {
    throw Error(ErrorCode::WrongKind,
                role + " log for video '" + log.video_id +
                    "' carries scores; aggregate or ensemble it into labels "
                    "first");
  }
}

std::string render_report_text(const ClassCounts& counts,
                               const F1Report& rep) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-22s %6s %6s %6s %8s  %s\n", "class", "tp",
                "fp", "fn", "support", "f1");
  out << buf;
  for (std::size_t i = 0; i < rep.class_ids.size(); ++i) {
    const std::size_t id = rep.class_ids[i];
    std::snprintf(buf, sizeof(buf), "%-22s %6lld %6lld %6lld %8lld  %s\n",
                  std::string(class_name(rep.class_set,
                                         static_cast<std::uint8_t>(id)))
                      .c_str(),
                  static_cast<long long>(counts.tp[id]),
                  static_cast<long long>(counts.fp[id]),
                  static_cast<long long>(counts.fn[id]),
                  static_cast<long long>(counts.support(id)),
                  format_double(rep.f1[i]).c_str());
    out << buf;
  }
  out << "average_f1  " << format_double(rep.average_f1) << '\n';
  if (rep.weighted_f1) {
    out << "weighted_f1 " << format_double(*rep.weighted_f1) << '\n';
  } else {
    out << "weighted_f1 undefined (no ground-truth support)\n";
  }
  return out.str();
}

std::string render_report_json(const ClassCounts& counts, const F1Report& rep,
                               bool excluded_other) {
  nlohmann::json doc;
  doc["average_f1"] = rep.average_f1;
  doc["class_set"] = std::string(class_set_name(rep.class_set));
  doc["classes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.class_ids.size(); ++i) {
    const std::size_t id = rep.class_ids[i];
    nlohmann::json row;
    row["class"] = std::string(
        class_name(rep.class_set, static_cast<std::uint8_t>(id)));
    row["f1"] = rep.f1[i];
    row["fn"] = counts.fn[id];
    row["fp"] = counts.fp[id];
    row["support"] = counts.support(id);
    row["tp"] = counts.tp[id];
    doc["classes"].push_back(row);
  }
  doc["exclude_other"] = excluded_other;
  doc["total_support"] = rep.total_support;
  if (rep.weighted_f1) {
    doc["weighted_f1"] = *rep.weighted_f1;
  } else {
    doc["weighted_f1"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

int finish_evaluate(const EvaluateArgs& a, std::vector<EvalPairs> pairs,
                    ClassSet set) {
  if (a.exclude_other && set != ClassSet::kCompound) {
    throw Error(ErrorCode::UsageError,
                "--exclude-other only applies to compound labels");
  }
  if (a.exclude_other) {
    for (auto& p : pairs) {
      auto filtered = exclude_other(p.preds, p.gts);
      p.preds = std::move(filtered.preds);
      p.gts = std::move(filtered.gts);
    }
  }
  const auto shards = parallel_map(pairs.size(), [&](std::size_t i) {
    return confusion(pairs[i].preds, pairs[i].gts, set);
  });
  ClassCounts total = confusion({}, {}, set);
  for (const auto& shard : shards) total.merge(shard);
  const auto rep = f1_aggregate(total, Weighting::kAverage);
  write_output(a.out_dir, "report.json",
               render_report_json(total, rep, a.exclude_other));
  write_output(a.out_dir, "report.txt", render_report_text(total, rep));
  return 0;
}

int run_evaluate_frames(const EvaluateArgs& a) {
  std::map<std::string, PredictionLog> gt_by_video;
  for (const auto& path : a.gt_paths) {
    auto log = load_predictions(path);
    require_label_log(log, "ground-truth");
    const std::string video_id = log.video_id;
    if (!gt_by_video.emplace(video_id, std::move(log)).second) {
      throw Error(ErrorCode::InputError,
                  "duplicate ground truth for video '" + video_id + "'");
    }
  }

  std::vector<EvalPairs> pairs;
  std::optional<ClassSet> set;
  for (const auto& path : a.pred_paths) {
    const auto log = load_predictions(path);
    require_label_log(log, "prediction");
    const auto gt = gt_by_video.find(log.video_id);
    if (gt == gt_by_video.end()) {
      throw Error(ErrorCode::InputError,
                  "no ground truth for video '" + log.video_id + "'");
    }
    if (gt->second.class_set != log.class_set) {
      throw Error(ErrorCode::MixedClassSets,
                  "prediction and ground truth for video '" + log.video_id +
                      "' use different class sets");
    }
    if (set && *set != log.class_set) {
      throw Error(ErrorCode::MixedClassSets,
                  "all evaluated logs must share one class set");
    }
    set = log.class_set;
    if (gt->second.labels.size() != log.labels.size()) {
      throw Error(ErrorCode::LengthMismatch,
                  "video '" + log.video_id + "': " +
                      std::to_string(log.labels.size()) +
                      " predicted frames vs " +
                      std::to_string(gt->second.labels.size()) +
                      " ground-truth frames");
    }
    pairs.push_back({log.labels, gt->second.labels});
  }
  return finish_evaluate(a, std::move(pairs), *set);
}

int run_evaluate_videos(const EvaluateArgs& a) {
  std::vector<VideoLabelRow> preds;
  {
    auto stream = open_input(a.pred_videos_path);
    preds = parse_video_labels(stream, a.pred_videos_path);
  }

  std::map<std::string, VideoLabelRow> gt_by_video;
  if (!a.gt_videos_path.empty()) {
    auto stream = open_input(a.gt_videos_path);
    for (auto& row : parse_video_labels(stream, a.gt_videos_path)) {
      const std::string video_id = row.video_id;
      if (!gt_by_video.emplace(video_id, std::move(row)).second) {
        throw Error(ErrorCode::InputError,
                    "duplicate ground truth for video '" + video_id + "'");
      }
    }
  } else {
    auto stream = open_input(a.gt_timeline_path);
    const auto timeline = parse_timeline(stream);
    for (const auto& entry : timeline.entries) {
      auto [it, inserted] = gt_by_video.emplace(
          entry.video_id,
          VideoLabelRow{entry.video_id, ClassSet::kCompound,
                        static_cast<std::uint8_t>(entry.label)});
      if (!inserted &&
          it->second.label != static_cast<std::uint8_t>(entry.label)) {
        throw Error(ErrorCode::InputError,
                    "video '" + entry.video_id +
                        "' has segments with different labels; a video-level "
                        "ground truth needs one label per video");
      }
    }
  }

  EvalPairs pairs;
  std::optional<ClassSet> set;
  for (const auto& pred : preds) {
    const auto gt = gt_by_video.find(pred.video_id);
    if (gt == gt_by_video.end()) {
      throw Error(ErrorCode::InputError,
                  "no ground truth for video '" + pred.video_id + "'");
    }
    if (pred.set != gt->second.set || (set && *set != pred.set)) {
      throw Error(ErrorCode::MixedClassSets,
                  "all evaluated labels must share one class set");
    }
    set = pred.set;
    pairs.preds.push_back(pred.label);
    pairs.gts.push_back(gt->second.label);
  }
  if (!set) {
    throw Error(ErrorCode::EmptyInput, "no videos to evaluate");
  }
  std::vector<EvalPairs> all;
  all.push_back(std::move(pairs));
  return finish_evaluate(a, std::move(all), *set);
}

int run_evaluate(const EvaluateArgs& a) {
  const bool frame_mode = !a.pred_paths.empty();
  const bool video_mode = !a.pred_videos_path.empty();
  if (frame_mode == video_mode) {
    throw Error(ErrorCode::UsageError,
                "give either --pred/--gt label logs or --pred-videos with a "
                "video-level ground truth");
  }
  if (frame_mode) {
    if (a.gt_paths.empty() || !a.gt_videos_path.empty() ||
        !a.gt_timeline_path.empty()) {
      throw Error(ErrorCode::UsageError,
                  "frame-level evaluation pairs --pred with --gt label logs");
    }
    return run_evaluate_frames(a);
  }
  if (a.gt_videos_path.empty() == a.gt_timeline_path.empty() ||
      !a.gt_paths.empty()) {
    throw Error(ErrorCode::UsageError,
                "video-level evaluation pairs --pred-videos with exactly one "
                "of --gt-videos or --gt-timeline");
  }
  return run_evaluate_videos(a);
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

struct ReportArgs {
  std::string timeline_path;
  std::string fold_scores_text;
  std::string out_dir;
};

int run_report(const ReportArgs& a) {
  if (a.timeline_path.empty() && a.fold_scores_text.empty()) {
    throw Error(ErrorCode::UsageError,
                "nothing to report: give --timeline and/or --fold-scores");
  }
  if (!a.timeline_path.empty()) {
    auto stream = open_input(a.timeline_path);
    const auto timeline = parse_timeline(stream);
    const auto report = distribution_report(
        std::span<const TimelineEntry>(timeline.entries));
    write_output(a.out_dir, "distribution.txt", render_distribution(report));
    write_output(a.out_dir, "distribution.json", distribution_to_json(report));
  }
  if (!a.fold_scores_text.empty()) {
    std::vector<double> scores;
    std::size_t pos = 0;
    const std::string& text = a.fold_scores_text;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const auto len = comma == std::string::npos ? std::string::npos
                                                  : comma - pos;
      const auto value = parse_double_strict(
          std::string_view(text).substr(pos, len));
      if (!value) {
        throw Error(ErrorCode::UsageError,
                    "--fold-scores wants a comma-separated list of numbers");
      }
      scores.push_back(*value);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    const auto stats = fold_mean_std(scores);
    nlohmann::json doc;
    doc["mean"] = stats.mean;
    doc["scores"] = scores;
    doc["stddev"] = stats.stddev;
    write_output(a.out_dir, "fold_stats.json", doc.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Deterministic tooling around compound-emotion pipelines: cue "
      "textualization, timeline segmentation and splitting, label "
      "aggregation, frame ensembling, and F1 evaluation."};
  app.name("cuecast");
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Read options from a [subcommand] key = value file");

  const std::map<std::string, EdgePolicy> edge_map{
      {"truncate", EdgePolicy::kTruncateAtEdges},
      {"require-full", EdgePolicy::kRequireFull}};
  const std::map<std::string, AuNameStyle> style_map{
      {"code", AuNameStyle::kCode},
      {"name", AuNameStyle::kName},
      {"code-and-name", AuNameStyle::kCodeAndName}};
  const std::map<std::string, VideoStrategy> strategy_map{
      {"majority", VideoStrategy::kMajority},
      {"avg-logits", VideoStrategy::kAvgLogits},
      {"avg-probs", VideoStrategy::kAvgProbs}};

  TextualizeArgs tx;
  auto* tx_cmd = app.add_subcommand(
      "textualize", "Render sliding-window cue summaries into prompt records");
  tx_cmd->add_option("--au", tx.au_path, "Action-unit intensity CSV");
  tx_cmd->add_option("--emotions", tx.emotions_path,
                     "Visual emotion probability CSV");
  tx_cmd->add_option("--tone", tx.tone_path, "Prosody tone CSV");
  tx_cmd->add_option("--avd", tx.avd_path,
                     "Arousal/valence/dominance CSV");
  tx_cmd->add_option("--transcript", tx.transcript_path,
                     "Whole-video transcript text file");
  tx_cmd->add_option("--video-id", tx.video_id, "Video id for the records")
      ->capture_default_str();
  tx_cmd->add_option("--fps", tx.fps, "Video frame rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tx_cmd->add_option("--window", tx.cfg.window.size, "Window size in frames")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tx_cmd->add_option("--hop", tx.cfg.window.hop, "Hop between windows")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tx_cmd->add_option("--edge", tx.cfg.window.policy,
                     "Edge policy: truncate or require-full")
      ->transform(CLI::CheckedTransformer(edge_map, CLI::ignore_case));
  tx_cmd->add_option("--au-threshold", tx.cfg.au_threshold,
                     "Activation threshold for AU intensities")
      ->capture_default_str();
  tx_cmd->add_option("--tone-threshold", tx.cfg.tone_threshold,
                     "High/Low threshold for tone scores")
      ->capture_default_str();
  tx_cmd->add_option("--avd-threshold", tx.cfg.avd_threshold,
                     "High/Low threshold for arousal/valence/dominance")
      ->capture_default_str();
  tx_cmd->add_option("--tone-top-k", tx.cfg.tone_top_k,
                     "Number of tone cues to describe")
      ->capture_default_str();
  tx_cmd->add_option("--emotion-top-k", tx.cfg.emotion_top_k,
                     "Number of visual emotions to name")
      ->capture_default_str();
  tx_cmd->add_option("--au-style", tx.cfg.au_name_style,
                     "AU rendering: code, name, or code-and-name")
      ->transform(CLI::CheckedTransformer(style_map, CLI::ignore_case));
  tx_cmd->add_option("--out", tx.out_dir, "Output directory")->required();

  SegmentArgs seg;
  auto* seg_cmd = app.add_subcommand(
      "segment", "Cut an annotation timeline into frame-aligned segments");
  seg_cmd->add_option("--timeline", seg.timeline_path, "Timeline CSV")
      ->required();
  seg_cmd->add_option("--fps", seg.fps, "Video frame rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  seg_cmd->add_option("--out", seg.out_dir, "Output directory")->required();

  SplitArgs sp;
  auto* sp_cmd = app.add_subcommand(
      "split", "Assign segments to stratified cross-validation folds");
  sp_cmd->add_option("--timeline", sp.timeline_path, "Timeline CSV")
      ->required();
  sp_cmd->add_option("--fps", sp.fps, "Video frame rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sp_cmd->add_option("--k", sp.k, "Number of folds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sp_cmd->add_option("--seed", sp.seed, "Shuffle seed")->capture_default_str();
  sp_cmd->add_option("--out", sp.out_dir, "Output directory")->required();

  AggregateArgs ag;
  auto* ag_cmd = app.add_subcommand(
      "aggregate",
      "Reduce per-frame logs to video labels or derive compound labels");
  ag_cmd->add_option("--pred", ag.pred_paths, "Prediction log JSONL")
      ->required();
  ag_cmd->add_option("--strategy", ag.strategy,
                     "Video label strategy: majority, avg-logits, avg-probs")
      ->transform(CLI::CheckedTransformer(strategy_map, CLI::ignore_case));
  ag_cmd->add_flag("--derive-compound", ag.derive_compound,
                   "Map basic-class scores to per-frame compound labels");
  ag_cmd->add_option("--out", ag.out_dir, "Output directory")->required();

  EnsembleArgs en;
  auto* en_cmd = app.add_subcommand(
      "ensemble", "Majority-vote several frame-level label logs");
  en_cmd->add_option("--pred", en.pred_paths, "Prediction log JSONL")
      ->required();
  en_cmd->add_option("--weights", en.weights_text,
                     "Vote weights as model=k,model=k,...");
  en_cmd->add_option("--window", en.window, "Trailing vote window in frames")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  en_cmd->add_option("--out", en.out_dir, "Output directory")->required();

  EvaluateArgs ev;
  auto* ev_cmd = app.add_subcommand(
      "evaluate", "Score predictions against ground truth with the F1 family");
  ev_cmd->add_option("--pred", ev.pred_paths,
                     "Frame-level prediction label logs");
  ev_cmd->add_option("--gt", ev.gt_paths, "Frame-level ground-truth label logs");
  ev_cmd->add_option("--pred-videos", ev.pred_videos_path,
                     "Video-level predictions (aggregate output)");
  ev_cmd->add_option("--gt-videos", ev.gt_videos_path,
                     "Video-level ground-truth labels");
  ev_cmd->add_option("--gt-timeline", ev.gt_timeline_path,
                     "Timeline CSV giving one label per video");
  ev_cmd->add_flag("--exclude-other", ev.exclude_other,
                   "Drop positions whose ground truth is Other");
  ev_cmd->add_option("--out", ev.out_dir, "Output directory")->required();

  ReportArgs rp;
  auto* rp_cmd = app.add_subcommand(
      "report", "Class distribution tables and fold-score statistics");
  rp_cmd->add_option("--timeline", rp.timeline_path, "Timeline CSV");
  rp_cmd->add_option("--fold-scores", rp.fold_scores_text,
                     "Comma-separated per-fold scores");
  rp_cmd->add_option("--out", rp.out_dir, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_record("UsageError", e.what());
    return 2;
  }

  try {
    if (*tx_cmd) return run_textualize(tx);
    if (*seg_cmd) return run_segment(seg);
    if (*sp_cmd) return run_split(sp);
    if (*ag_cmd) {
      ag.strategy_given = ag_cmd->count("--strategy") > 0;
      return run_aggregate(ag);
    }
    if (*en_cmd) return run_ensemble(en);
    if (*ev_cmd) return run_evaluate(ev);
    if (*rp_cmd) return run_report(rp);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UsageError) {
      err << error_record("UsageError", e.what());
      return 2;
    }
    err << error_record(error_code_name(e.code()), e.what(), e.line());
    return 1;
  } catch (const std::exception& e) {
    err << error_record("InputError", e.what());
    return 1;
  }
  err << error_record("UsageError", "unknown subcommand");
  return 2;
}

}  // namespace cuecast
