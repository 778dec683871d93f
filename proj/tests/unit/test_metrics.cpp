#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cuecast/error.hpp"
#include "cuecast/metrics.hpp"

using namespace cuecast;

namespace {

// Per-class one-vs-rest counting straight from the definition.
ClassCounts counts_oracle(const std::vector<std::uint8_t>& preds,
                          const std::vector<std::uint8_t>& gts,
                          ClassSet set) {
  const std::size_t n = class_count(set);
  ClassCounts counts;
  counts.class_set = set;
  counts.tp.assign(n, 0);
  counts.fp.assign(n, 0);
  counts.fn.assign(n, 0);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      const bool p = preds[i] == c;
      const bool g = gts[i] == c;
      if (p && g) ++counts.tp[c];
      if (p && !g) ++counts.fp[c];
      if (!p && g) ++counts.fn[c];
    }
  }
  return counts;
}

ClassCounts make_counts(ClassSet set, std::vector<std::int64_t> tp,
                        std::vector<std::int64_t> fp,
                        std::vector<std::int64_t> fn) {
  ClassCounts counts;
  counts.class_set = set;
  counts.tp = std::move(tp);
  counts.fp = std::move(fp);
  counts.fn = std::move(fn);
  return counts;
}

TimelineEntry entry(const std::string& video, double start, double end,
                    CompoundEmotion label) {
  TimelineEntry e;
  e.video_id = video;
  e.start_s = start;
  e.end_s = end;
  e.label = label;
  return e;
}

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("confusion counts a perfect prediction run") {
  const std::vector<std::uint8_t> labels{0, 1, 2, 3, 5, 6, 7};
  const auto counts = confusion(labels, labels, ClassSet::kCompound);
  for (std::uint8_t c : labels) {
    CHECK(counts.tp[c] == 1);
    CHECK(counts.fp[c] == 0);
    CHECK(counts.fn[c] == 0);
  }
  CHECK(counts.tp[4] == 0);
  CHECK(counts.support(0) == 1);
}

TEST_CASE("confusion books a single error as one fp and one fn") {
  const auto counts = confusion(std::vector<std::uint8_t>{2},
                                std::vector<std::uint8_t>{5},
                                ClassSet::kCompound);
  CHECK(counts.fp[2] == 1);
  CHECK(counts.fn[5] == 1);
  CHECK(counts.tp[2] == 0);
  CHECK(counts.tp[5] == 0);
}

TEST_CASE("confusion matches independent per-class counting") {
  std::mt19937_64 rng(7);
  for (ClassSet set : {ClassSet::kBasic, ClassSet::kCompound}) {
    const std::size_t n_classes = class_count(set);
    std::vector<std::uint8_t> preds(500), gts(500);
    for (std::size_t i = 0; i < preds.size(); ++i) {
      preds[i] = static_cast<std::uint8_t>(rng() % n_classes);
      gts[i] = static_cast<std::uint8_t>(rng() % n_classes);
    }
    const auto got = confusion(preds, gts, set);
    const auto want = counts_oracle(preds, gts, set);
    CHECK(got.tp == want.tp);
    CHECK(got.fp == want.fp);
    CHECK(got.fn == want.fn);
  }
}

TEST_CASE("confusion validates lengths and label ranges") {
  CHECK_THROWS_AS(confusion(std::vector<std::uint8_t>{0, 1},
                            std::vector<std::uint8_t>{0},
                            ClassSet::kCompound),
                  Error);
  CHECK_THROWS_AS(confusion(std::vector<std::uint8_t>{8},
                            std::vector<std::uint8_t>{0},
                            ClassSet::kCompound),
                  Error);
  CHECK_THROWS_AS(confusion(std::vector<std::uint8_t>{0},
                            std::vector<std::uint8_t>{7},
                            ClassSet::kBasic),
                  Error);
}

TEST_CASE("per-class F1 computes 2PR/(P+R)") {
  // TP=3 FP=1 FN=2: P=3/4, R=3/5, F1=2*(9/20)/(27/20)=2/3.
  const auto counts = make_counts(ClassSet::kBasic, {3}, {1}, {2});
  CHECK(f1_per_class(counts, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("per-class F1 is zero on empty denominators") {
  CHECK(f1_per_class(make_counts(ClassSet::kBasic, {0}, {0}, {0}), 0) == 0.0);
  CHECK(f1_per_class(make_counts(ClassSet::kBasic, {0}, {4}, {0}), 0) == 0.0);
  CHECK(f1_per_class(make_counts(ClassSet::kBasic, {0}, {0}, {4}), 0) == 0.0);
  CHECK(f1_per_class(make_counts(ClassSet::kBasic, {0}, {3}, {2}), 0) == 0.0);
}

TEST_CASE("F1 is one exactly when tp>0 and fp==fn==0") {
  for (std::int64_t tp = 0; tp <= 3; ++tp) {
    for (std::int64_t fp = 0; fp <= 3; ++fp) {
      for (std::int64_t fn = 0; fn <= 3; ++fn) {
        const double f1 =
            f1_per_class(make_counts(ClassSet::kBasic, {tp}, {fp}, {fn}), 0);
        CHECK((f1 == 1.0) == (tp > 0 && fp == 0 && fn == 0));
      }
    }
  }
}

TEST_CASE("a perfect run aggregates to F1 one under both weightings") {
  std::vector<std::uint8_t> labels;
  for (std::uint8_t c : {0, 1, 2, 3, 5, 6, 7}) {
    labels.insert(labels.end(), 3, c);
  }
  const auto counts = confusion(labels, labels, ClassSet::kCompound);
  const auto report = f1_aggregate(counts, Weighting::kAverage);
  CHECK(report.average_f1 == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(report.weighted_f1.has_value());
  CHECK(*report.weighted_f1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.total_support == 21);
  CHECK(report.class_ids == std::vector<std::uint8_t>{0, 1, 2, 3, 5, 6, 7});
}

TEST_CASE("weighted F1 follows ground-truth support proportions") {
  // Nine correct Angrily Surprised, one Disgustedly Surprised predicted as
  // Fearfully Surprised: per-class F1 (1, 0, 0, ...), supports (9, 1, 0, ...).
  std::vector<std::uint8_t> preds(9, 0), gts(9, 0);
  preds.push_back(2);
  gts.push_back(1);
  const auto report =
      f1_aggregate(confusion(preds, gts, ClassSet::kCompound),
                   Weighting::kWeighted);
  REQUIRE(report.weighted_f1.has_value());
  CHECK(*report.weighted_f1 == doctest::Approx(0.9).epsilon(1e-12));
  // The uniform average spreads the same numbers over all seven evaluated
  // classes regardless of support.
  CHECK(report.average_f1 == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  CHECK(report.total_support == 10);
}

TEST_CASE("classes absent from the ground truth still weigh 1/7") {
  // Six evaluated compounds perfect, Sadly Surprised never occurs.
  std::vector<std::uint8_t> labels{0, 1, 2, 3, 5, 6};
  const auto report = f1_aggregate(
      confusion(labels, labels, ClassSet::kCompound), Weighting::kAverage);
  CHECK(report.average_f1 == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
  REQUIRE(report.weighted_f1.has_value());
  CHECK(*report.weighted_f1 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("equal supports make both weightings coincide") {
  std::mt19937_64 rng(13);
  std::vector<std::uint8_t> preds, gts;
  for (std::uint8_t c : {0, 1, 2, 3, 5, 6, 7}) {
    for (int i = 0; i < 4; ++i) {
      gts.push_back(c);
      // Roughly a quarter of predictions are wrong.
      preds.push_back(rng() % 4 == 0 ? static_cast<std::uint8_t>(rng() % 8)
                                     : c);
    }
  }
  const auto report = f1_aggregate(confusion(preds, gts, ClassSet::kCompound),
                                   Weighting::kWeighted);
  REQUIRE(report.weighted_f1.has_value());
  CHECK(*report.weighted_f1 ==
        doctest::Approx(report.average_f1).epsilon(1e-12));
}

TEST_CASE("aggregation ignores the order of prediction pairs") {
  std::mt19937_64 rng(17);
  std::vector<std::uint8_t> preds(200), gts(200);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    preds[i] = static_cast<std::uint8_t>(rng() % 7);
    gts[i] = static_cast<std::uint8_t>(rng() % 7);
  }
  const auto base =
      f1_aggregate(confusion(preds, gts, ClassSet::kBasic), Weighting::kAverage);
  std::vector<std::size_t> order(preds.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint8_t> preds2, gts2;
  for (std::size_t i : order) {
    preds2.push_back(preds[i]);
    gts2.push_back(gts[i]);
  }
  const auto shuffled = f1_aggregate(confusion(preds2, gts2, ClassSet::kBasic),
                                     Weighting::kAverage);
  CHECK(base.average_f1 == shuffled.average_f1);
  CHECK(base.f1 == shuffled.f1);
  CHECK(base.total_support == shuffled.total_support);
}

TEST_CASE("the basic set evaluates all seven classes") {
  std::vector<std::uint8_t> labels{0, 1, 2, 3, 4, 5, 6};
  const auto report = f1_aggregate(confusion(labels, labels, ClassSet::kBasic),
                                   Weighting::kAverage);
  CHECK(report.class_ids == std::vector<std::uint8_t>{0, 1, 2, 3, 4, 5, 6});
  CHECK(report.average_f1 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero ground-truth support") {
  ClassCounts counts;
  counts.class_set = ClassSet::kCompound;
  counts.tp.assign(8, 0);
  counts.fp.assign(8, 0);
  counts.fn.assign(8, 0);
  counts.fp[3] = 5;  // predictions exist, ground truth is all Other/absent
  CHECK_THROWS_AS(f1_aggregate(counts, Weighting::kWeighted), Error);
  const auto report = f1_aggregate(counts, Weighting::kAverage);
  CHECK(report.average_f1 == 0.0);
  CHECK_FALSE(report.weighted_f1.has_value());
  CHECK(report.total_support == 0);
}

TEST_CASE("merged shards equal one whole pass") {
  std::mt19937_64 rng(19);
  std::vector<std::uint8_t> preds(300), gts(300);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    preds[i] = static_cast<std::uint8_t>(rng() % 8);
    gts[i] = static_cast<std::uint8_t>(rng() % 8);
  }
  ClassCounts merged;
  merged.class_set = ClassSet::kCompound;
  merged.tp.assign(8, 0);
  merged.fp.assign(8, 0);
  merged.fn.assign(8, 0);
  for (std::size_t shard = 0; shard < 3; ++shard) {
    const std::size_t lo = shard * 100;
    merged.merge(confusion(
        std::span(preds).subspan(lo, 100), std::span(gts).subspan(lo, 100),
        ClassSet::kCompound));
  }
  const auto whole = confusion(preds, gts, ClassSet::kCompound);
  CHECK(merged.tp == whole.tp);
  CHECK(merged.fp == whole.fp);
  CHECK(merged.fn == whole.fn);
}

TEST_CASE("merging refuses mixed class sets") {
  auto basic = counts_oracle({0}, {0}, ClassSet::kBasic);
  const auto compound = counts_oracle({0}, {0}, ClassSet::kCompound);
  CHECK_THROWS_AS(basic.merge(compound), Error);
}

TEST_CASE("distribution report covers all classes in canonical order") {
  const auto report = distribution_report(std::span<const TimelineEntry>{});
  REQUIRE(report.rows.size() == 8);
  for (std::size_t c = 0; c < 8; ++c) {
    CHECK(report.rows[c].label == static_cast<CompoundEmotion>(c));
    CHECK(report.rows[c].count == 0);
    CHECK(report.rows[c].total_duration_s == 0.0);
  }
  CHECK(report.total_count == 0);
  CHECK(report.total_duration_s == 0.0);
}

TEST_CASE("a single entry lands in its class row") {
  const std::vector<TimelineEntry> entries{
      entry("v1", 1.0, 3.5, CompoundEmotion::kHappilySurprised)};
  const auto report = distribution_report(std::span(entries));
  const auto hs = static_cast<std::size_t>(CompoundEmotion::kHappilySurprised);
  CHECK(report.rows[hs].count == 1);
  CHECK(report.rows[hs].total_duration_s == doctest::Approx(2.5));
  CHECK(report.total_count == 1);
  CHECK(report.total_duration_s == doctest::Approx(2.5));

  const auto rendered = render_distribution(report);
  CHECK(rendered.find("class,segments,total_duration_s") == 0);
  CHECK(rendered.find("Happily Surprised,1,2.50") != std::string::npos);
  CHECK(rendered.find("Total,1,2.50") != std::string::npos);
}

TEST_CASE("rendered rows follow canonical class order") {
  std::vector<TimelineEntry> entries;
  for (std::size_t c = 0; c < 8; ++c) {
    entries.push_back(
        entry("v1", 10.0 * c, 10.0 * c + 1.0, static_cast<CompoundEmotion>(c)));
  }
  const auto rendered = render_distribution(distribution_report(std::span(entries)));
  std::size_t at = 0;
  for (std::size_t c = 0; c < 8; ++c) {
    const auto pos = rendered.find(compound_name(static_cast<CompoundEmotion>(c)));
    REQUIRE(pos != std::string::npos);
    CHECK(pos > at);
    at = pos;
  }
  CHECK(rendered.find("Total,8,8.00") > at);
}

TEST_CASE("the JSON distribution mirrors the table") {
  const std::vector<TimelineEntry> entries{
      entry("v1", 0.0, 2.0, CompoundEmotion::kSadlyAngry),
      entry("v2", 0.0, 3.0, CompoundEmotion::kSadlyAngry),
      entry("v3", 1.0, 2.25, CompoundEmotion::kOther)};
  const auto text = distribution_to_json(distribution_report(std::span(entries)));
  const auto parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.at("classes").size() == 8);
  CHECK(parsed.at("total_segments") == 3);
  CHECK(parsed.at("total_duration_s") == "6.25");
  bool saw_sa = false;
  for (const auto& row : parsed.at("classes")) {
    if (row.at("class") == "Sadly Angry") {
      saw_sa = true;
      CHECK(row.at("segments") == 2);
      CHECK(row.at("total_duration_s") == "5.00");
    }
  }
  CHECK(saw_sa);
  CHECK(text.back() == '\n');
}

TEST_CASE("fold statistics use the population deviation") {
  const std::vector<double> scores{2, 4, 4, 4, 5, 5, 7, 9};
  const auto stats = fold_mean_std(scores);
  CHECK(stats.mean == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(stats.stddev == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("fold statistics handle degenerate inputs") {
  CHECK_THROWS_AS(fold_mean_std(std::vector<double>{}), Error);
  const auto stats = fold_mean_std(std::vector<double>{41.7});
  CHECK(stats.mean == doctest::Approx(41.7));
  CHECK(stats.stddev == 0.0);
}

TEST_SUITE_END();
