#include "cuecast/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cuecast/error.hpp"
#include "cuecast/io_util.hpp"

namespace cuecast {
namespace {

using nlohmann::json;

const std::vector<std::pair<std::string, std::string>>& au_catalogue() {
  // Py-Feat's 20-AU intensity output, ascending AU number, with FACS names.
  static const std::vector<std::pair<std::string, std::string>> kAus = {
      {"AU01", "Inner brow raiser"},   {"AU02", "Outer brow raiser"},
      {"AU04", "Brow lowerer"},        {"AU05", "Upper lid raiser"},
      {"AU06", "Cheek raiser"},        {"AU07", "Lid tightener"},
      {"AU09", "Nose wrinkler"},       {"AU10", "Upper lip raiser"},
      {"AU11", "Nasolabial deepener"}, {"AU12", "Lip corner puller"},
      {"AU14", "Dimpler"},             {"AU15", "Lip corner depressor"},
      {"AU17", "Chin raiser"},         {"AU20", "Lip stretcher"},
      {"AU23", "Lip tightener"},       {"AU24", "Lip pressor"},
      {"AU25", "Lips part"},           {"AU26", "Jaw drop"},
      {"AU28", "Lip suck"},            {"AU43", "Eyes closed"},
  };
  return kAus;
}

std::optional<int> au_number(std::string_view name) {
  if (name.size() != 4 || name[0] != 'A' || name[1] != 'U') return std::nullopt;
  if (!std::isdigit(static_cast<unsigned char>(name[2])) ||
      !std::isdigit(static_cast<unsigned char>(name[3]))) {
    return std::nullopt;
  }
  return (name[2] - '0') * 10 + (name[3] - '0');
}

// Decides the canonical column order for a cue kind and validates names.
// Returns canonical names plus, for each canonical slot, the index of the
// originating header column.
struct ColumnPlan {
  std::vector<std::string> names;
  std::vector<std::size_t> source;
};

ColumnPlan plan_columns(CueKind kind, const std::vector<std::string>& header) {
  std::vector<std::string> raw(header.begin() + 1, header.end());
  for (auto& name : raw) name = trim_copy(name);

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);

  switch (kind) {
    case CueKind::kAuIntensity: {
      if (raw.size() != 20) {
        throw Error(ErrorCode::WrongAUCount,
                    "au_intensity tables carry exactly 20 AUs, found " +
                        std::to_string(raw.size()),
                    1);
      }
      for (const auto& name : raw) {
        if (!au_number(name)) {
          throw Error(ErrorCode::MalformedRow,
                      "'" + name + "' is not a zero-padded AU code", 1);
        }
      }
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return *au_number(raw[a]) < *au_number(raw[b]);
      });
      break;
    }
    case CueKind::kAvd: {
      if (raw.size() != 3) {
        throw Error(ErrorCode::MalformedRow,
                    "avd tables carry exactly arousal,valence,dominance", 1);
      }
      std::vector<std::string> keys;
      for (const auto& name : raw) keys.push_back(lower_copy(name));
      const std::array<std::string, 3> wanted = {"arousal", "valence",
                                                 "dominance"};
      std::vector<std::size_t> picked;
      for (const auto& w : wanted) {
        const auto it = std::find(keys.begin(), keys.end(), w);
        if (it == keys.end()) {
          throw Error(ErrorCode::MalformedRow, "missing avd column '" + w + "'",
                      1);
        }
        picked.push_back(static_cast<std::size_t>(it - keys.begin()));
      }
      order = picked;
      for (std::size_t i = 0; i < 3; ++i) raw[order[i]] = wanted[i];
      break;
    }
    case CueKind::kEmotionProb: {
      for (auto& name : raw) {
        const auto emotion = parse_basic(name);
        if (!emotion) {
          throw Error(ErrorCode::UnknownLabel,
                      "'" + name + "' is not a basic emotion", 1);
        }
        name = std::string(basic_name(*emotion));
      }
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return raw[a] < raw[b];
      });
      break;
    }
    case CueKind::kTone: {
      for (const auto& name : raw) {
        if (name.empty()) {
          throw Error(ErrorCode::MalformedRow, "empty tone column name", 1);
        }
      }
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return raw[a] < raw[b];
      });
      break;
    }
  }

  ColumnPlan plan;
  for (std::size_t slot : order) {
    plan.names.push_back(raw[slot]);
    plan.source.push_back(slot);
  }
  for (std::size_t i = 1; i < plan.names.size(); ++i) {
    if (plan.names[i] == plan.names[i - 1]) {
      throw Error(ErrorCode::MalformedRow,
                  "duplicate cue column '" + plan.names[i] + "'", 1);
    }
  }
  return plan;
}

bool unit_interval_kind(CueKind kind) {
  return kind == CueKind::kAuIntensity || kind == CueKind::kAvd ||
         kind == CueKind::kEmotionProb;
}

void check_score(CueKind kind, double value, const std::string& cue,
                 std::size_t line) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::NonFiniteScore,
                "non-finite score in column '" + cue + "'", line);
  }
  if (unit_interval_kind(kind) && (value < 0.0 || value > 1.0)) {
    throw Error(ErrorCode::OutOfRangeScore,
                "score " + format_double(value) + " in column '" + cue +
                    "' outside [0,1]",
                line);
  }
}

json parse_json_line(const std::string& line, std::size_t line_no) {
  json value = json::parse(line, nullptr, false);
  if (value.is_discarded() || !value.is_object()) {
    throw Error(ErrorCode::SchemaError, "line is not a JSON object", line_no);
  }
  return value;
}

double require_number(const json& object, const char* key, std::size_t line_no) {
  const auto it = object.find(key);
  if (it == object.end() || !it->is_number()) {
    throw Error(ErrorCode::SchemaError,
                std::string("missing or non-numeric '") + key + "'", line_no);
  }
  return it->get<double>();
}

std::string require_string(const json& object, const char* key,
                           std::size_t line_no) {
  const auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw Error(ErrorCode::SchemaError,
                std::string("missing or non-string '") + key + "'", line_no);
  }
  return it->get<std::string>();
}

}  // namespace

const std::vector<std::string>& default_au_set() {
  static const std::vector<std::string> kCodes = [] {
    std::vector<std::string> codes;
    for (const auto& [code, name] : au_catalogue()) codes.push_back(code);
    return codes;
  }();
  return kCodes;
}

std::string au_display_name(const std::string& au_code) {
  for (const auto& [code, name] : au_catalogue()) {
    if (code == au_code) return name;
  }
  return {};
}

CueTable parse_cue_table(std::istream& stream, CueKind kind,
                         std::string video_id, double frame_rate) {
  if (frame_rate <= 0.0 || !std::isfinite(frame_rate)) {
    throw Error(ErrorCode::NonPositiveRate, "frame rate must be positive");
  }

  std::string line;
  if (!std::getline(stream, line)) {
    throw Error(ErrorCode::MalformedRow, "missing header row", 1);
  }
  const std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2 || lower_copy(trim_copy(header[0])) != "frame") {
    throw Error(ErrorCode::MalformedRow,
                "header must be frame,<cue1>,...,<cueK>", 1);
  }
  const ColumnPlan plan = plan_columns(kind, header);

  CueTable table;
  table.video_id = std::move(video_id);
  table.frame_rate = frame_rate;
  table.kind = kind;
  table.cue_names = plan.names;

  std::size_t line_no = 1;
  bool have_prev = false;
  std::int64_t prev_frame = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (trim_copy(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::MalformedRow,
                  "expected " + std::to_string(header.size()) +
                      " fields, found " + std::to_string(fields.size()),
                  line_no);
    }
    const auto frame = parse_int_strict(trim_copy(fields[0]));
    if (!frame || *frame < 0) {
      throw Error(ErrorCode::MalformedRow,
                  "bad frame index '" + fields[0] + "'", line_no);
    }
    if (have_prev && *frame == prev_frame) {
      throw Error(ErrorCode::DuplicateFrame,
                  "duplicate frame index " + std::to_string(*frame), line_no);
    }
    if (have_prev && *frame < prev_frame) {
      throw Error(ErrorCode::NonMonotonicFrame,
                  "frame index " + std::to_string(*frame) +
                      " after " + std::to_string(prev_frame),
                  line_no);
    }
    prev_frame = *frame;
    have_prev = true;

    CueRow row;
    row.frame = *frame;
    row.values.resize(plan.names.size());
    for (std::size_t slot = 0; slot < plan.names.size(); ++slot) {
      const std::string& field = fields[1 + plan.source[slot]];
      const auto value = parse_double_strict(trim_copy(field));
      if (!value) {
        throw Error(ErrorCode::MalformedRow,
                    "bad score '" + field + "' in column '" +
                        plan.names[slot] + "'",
                    line_no);
      }
      check_score(kind, *value, plan.names[slot], line_no);
      row.values[slot] = *value;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string serialize_cue_table(const CueTable& table) {
  std::ostringstream out;
  out << "frame";
  for (const auto& name : table.cue_names) out << ',' << name;
  out << '\n';
  for (const auto& row : table.rows) {
    out << row.frame;
    for (double value : row.values) out << ',' << format_double(value);
    out << '\n';
  }
  return out.str();
}

SegmentTimeline parse_timeline(std::istream& stream) {
  std::string line;
  if (!std::getline(stream, line)) {
    throw Error(ErrorCode::MalformedRow, "missing header row", 1);
  }
  const std::vector<std::string> header = split_csv_line(line);
  const std::array<std::string, 4> wanted = {"video_id", "start_s", "end_s",
                                             "label"};
  if (header.size() != 4) {
    throw Error(ErrorCode::MalformedRow,
                "header must be video_id,start_s,end_s,label", 1);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (lower_copy(trim_copy(header[i])) != wanted[i]) {
      throw Error(ErrorCode::MalformedRow,
                  "header must be video_id,start_s,end_s,label", 1);
    }
  }

  struct Parsed {
    TimelineEntry entry;
    std::size_t line_no;
  };
  std::vector<Parsed> parsed;
  std::size_t line_no = 1;
  while (std::getline(stream, line)) {
    ++line_no;
    if (trim_copy(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 4) {
      throw Error(ErrorCode::MalformedRow,
                  "expected 4 fields, found " + std::to_string(fields.size()),
                  line_no);
    }
    TimelineEntry entry;
    entry.video_id = trim_copy(fields[0]);
    if (entry.video_id.empty()) {
      throw Error(ErrorCode::MalformedRow, "empty video_id", line_no);
    }
    const auto start = parse_double_strict(trim_copy(fields[1]));
    const auto end = parse_double_strict(trim_copy(fields[2]));
    if (!start || !end || !std::isfinite(*start) || !std::isfinite(*end) ||
        *start < 0.0) {
      throw Error(ErrorCode::MalformedRow,
                  "bad start_s/end_s '" + fields[1] + "','" + fields[2] + "'",
                  line_no);
    }
    if (*end <= *start) {
      throw Error(ErrorCode::NegativeDuration,
                  "end_s " + format_double(*end) + " <= start_s " +
                      format_double(*start),
                  line_no);
    }
    entry.start_s = *start;
    entry.end_s = *end;
    const auto label = parse_compound(fields[3]);
    if (!label) {
      throw Error(ErrorCode::UnknownLabel,
                  "unknown label '" + trim_copy(fields[3]) + "'", line_no);
    }
    entry.label = *label;
    parsed.push_back({std::move(entry), line_no});
  }

  std::stable_sort(parsed.begin(), parsed.end(),
                   [](const Parsed& a, const Parsed& b) {
                     if (a.entry.video_id != b.entry.video_id) {
                       return a.entry.video_id < b.entry.video_id;
                     }
                     if (a.entry.start_s != b.entry.start_s) {
                       return a.entry.start_s < b.entry.start_s;
                     }
                     return a.entry.end_s < b.entry.end_s;
                   });
  for (std::size_t i = 1; i < parsed.size(); ++i) {
    const auto& prev = parsed[i - 1];
    const auto& cur = parsed[i];
    if (prev.entry.video_id == cur.entry.video_id &&
        cur.entry.start_s < prev.entry.end_s) {
      throw Error(ErrorCode::OverlapError,
                  "segments on lines " + std::to_string(prev.line_no) +
                      " and " + std::to_string(cur.line_no) + " of video '" +
                      cur.entry.video_id + "' overlap",
                  cur.line_no);
    }
  }

  SegmentTimeline timeline;
  for (auto& item : parsed) timeline.entries.push_back(std::move(item.entry));
  return timeline;
}

std::string serialize_timeline(const SegmentTimeline& timeline) {
  std::ostringstream out;
  out << "video_id,start_s,end_s,label\n";
  for (const auto& entry : timeline.entries) {
    out << entry.video_id << ',' << format_double(entry.start_s) << ','
        << format_double(entry.end_s) << ',' << compound_name(entry.label)
        << '\n';
  }
  return out.str();
}

std::string_view class_name(ClassSet set, std::uint8_t id) {
  if (id >= class_count(set)) {
    throw Error(ErrorCode::UnknownLabel,
                "class id " + std::to_string(id) + " out of range");
  }
  return set == ClassSet::kBasic
             ? basic_name(static_cast<BasicEmotion>(id))
             : compound_name(static_cast<CompoundEmotion>(id));
}

std::uint8_t parse_class_label(ClassSet set, std::string_view name) {
  if (set == ClassSet::kBasic) {
    const auto label = parse_basic(name);
    if (label) return static_cast<std::uint8_t>(*label);
  } else {
    const auto label = parse_compound(name);
    if (label) return static_cast<std::uint8_t>(*label);
  }
  throw Error(ErrorCode::UnknownLabel,
              "unknown " + std::string(class_set_name(set)) + " label '" +
                  std::string(name) + "'");
}

PredictionLog parse_predictions(std::istream& stream) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(stream, line)) {
    throw Error(ErrorCode::SchemaError, "missing header line", 1);
  }
  ++line_no;
  const json header = parse_json_line(line, line_no);

  PredictionLog log;
  log.model_id = require_string(header, "model_id", line_no);
  log.video_id = require_string(header, "video_id", line_no);
  log.frame_rate = require_number(header, "frame_rate", line_no);
  if (log.frame_rate <= 0.0 || !std::isfinite(log.frame_rate)) {
    throw Error(ErrorCode::SchemaError, "frame_rate must be positive",
                line_no);
  }
  log.class_set = parse_class_set(require_string(header, "class_set", line_no));

  bool kind_fixed = false;
  std::int64_t expected_frame = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (trim_copy(line).empty()) continue;
    const json record = parse_json_line(line, line_no);

    const double frame_raw = require_number(record, "frame", line_no);
    const auto frame = static_cast<std::int64_t>(frame_raw);
    if (static_cast<double>(frame) != frame_raw) {
      throw Error(ErrorCode::SchemaError, "frame must be an integer", line_no);
    }
    if (frame != expected_frame) {
      throw Error(ErrorCode::GapInFrames,
                  "expected frame " + std::to_string(expected_frame) +
                      ", found " + std::to_string(frame),
                  line_no);
    }
    ++expected_frame;

    const std::string kind_text = require_string(record, "kind", line_no);
    LogKind kind;
    if (kind_text == "label") {
      kind = LogKind::kLabels;
    } else if (kind_text == "logits") {
      kind = LogKind::kLogits;
    } else if (kind_text == "probabilities") {
      kind = LogKind::kProbabilities;
    } else {
      throw Error(ErrorCode::SchemaError, "unknown kind '" + kind_text + "'",
                  line_no);
    }
    if (!kind_fixed) {
      log.kind = kind;
      kind_fixed = true;
    } else if (kind != log.kind) {
      throw Error(ErrorCode::SchemaError,
                  "mixed frame kinds within one prediction log", line_no);
    }

    if (kind == LogKind::kLabels) {
      const std::string label = require_string(record, "label", line_no);
      try {
        log.labels.push_back(parse_class_label(log.class_set, label));
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), line_no);
      }
    } else {
      const auto it = record.find("values");
      if (it == record.end() || !it->is_array()) {
        throw Error(ErrorCode::SchemaError, "missing 'values' array", line_no);
      }
      std::vector<double> values;
      for (const auto& item : *it) {
        if (!item.is_number()) {
          throw Error(ErrorCode::SchemaError, "non-numeric score value",
                      line_no);
        }
        values.push_back(item.get<double>());
      }
      if (values.size() != class_count(log.class_set)) {
        throw Error(ErrorCode::SchemaError,
                    "expected " + std::to_string(class_count(log.class_set)) +
                        " values, found " + std::to_string(values.size()),
                    line_no);
      }
      for (double v : values) {
        if (!std::isfinite(v)) {
          throw Error(ErrorCode::NonFiniteScore, "non-finite score", line_no);
        }
      }
      if (kind == LogKind::kProbabilities) {
        double sum = 0.0;
        for (double v : values) {
          if (v < 0.0) {
            throw Error(ErrorCode::BadProbabilitySum,
                        "negative probability at frame " +
                            std::to_string(frame),
                        line_no);
          }
          sum += v;
        }
        if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
          throw Error(ErrorCode::BadProbabilitySum,
                      "probabilities at frame " + std::to_string(frame) +
                          " sum to " + format_double(sum),
                      line_no);
        }
      }
      log.scores.push_back(std::move(values));
    }
  }
  return log;
}

std::string serialize_predictions(const PredictionLog& log) {
  std::ostringstream out;
  json header;
  header["model_id"] = log.model_id;
  header["video_id"] = log.video_id;
  header["frame_rate"] = log.frame_rate;
  header["class_set"] = std::string(class_set_name(log.class_set));
  out << header.dump() << '\n';

  const std::size_t n = log.frame_count();
  for (std::size_t t = 0; t < n; ++t) {
    json record;
    record["frame"] = t;
    if (log.kind == LogKind::kLabels) {
      record["kind"] = "label";
      record["label"] = std::string(class_name(log.class_set, log.labels[t]));
    } else {
      record["kind"] =
          log.kind == LogKind::kLogits ? "logits" : "probabilities";
      record["values"] = log.scores[t];
    }
    out << record.dump() << '\n';
  }
  return out.str();
}

std::string read_transcript(std::istream& stream) {
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  std::string text = buffer.str();

  std::string flattened;
  flattened.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space && !flattened.empty()) flattened.push_back(' ');
    pending_space = false;
    flattened.push_back(c);
  }
  return flattened;
}

}  // namespace cuecast
