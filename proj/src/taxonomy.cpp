#include "cuecast/taxonomy.hpp"

#include <algorithm>
#include <cctype>

#include "cuecast/error.hpp"

namespace cuecast {
namespace {

constexpr std::array<std::string_view, kBasicCount> kBasicNames = {
    "anger", "disgust", "fear", "joy", "neutral", "sadness", "surprise",
};

constexpr std::array<std::string_view, kCompoundCount> kCompoundNames = {
    "Angrily Surprised", "Disgustedly Surprised", "Fearfully Surprised",
    "Happily Surprised", "Other", "Sadly Angry", "Sadly Fearful",
    "Sadly Surprised",
};

// "Happily" in the compound vocabulary is identified with the basic class
// joy, so a handful of happiness spellings alias to it.
constexpr std::array<std::pair<std::string_view, BasicEmotion>, 3>
    kBasicAliases = {{
        {"happy", BasicEmotion::kJoy},
        {"happiness", BasicEmotion::kJoy},
        {"happily", BasicEmotion::kJoy},
    }};

constexpr std::array<std::pair<BasicEmotion, BasicEmotion>, kCompoundCount>
    kPairTable = {{
        {BasicEmotion::kAnger, BasicEmotion::kSurprise},    // Angrily Surprised
        {BasicEmotion::kDisgust, BasicEmotion::kSurprise},  // Disgustedly Surprised
        {BasicEmotion::kFear, BasicEmotion::kSurprise},     // Fearfully Surprised
        {BasicEmotion::kJoy, BasicEmotion::kSurprise},      // Happily Surprised
        {BasicEmotion::kAnger, BasicEmotion::kAnger},       // Other: unused slot
        {BasicEmotion::kSadness, BasicEmotion::kAnger},     // Sadly Angry
        {BasicEmotion::kSadness, BasicEmotion::kFear},      // Sadly Fearful
        {BasicEmotion::kSadness, BasicEmotion::kSurprise},  // Sadly Surprised
    }};

}  // namespace

std::size_t class_count(ClassSet set) {
  return set == ClassSet::kBasic ? kBasicCount : kCompoundCount;
}

std::string_view class_set_name(ClassSet set) {
  return set == ClassSet::kBasic ? "basic" : "compound";
}

ClassSet parse_class_set(std::string_view text) {
  const std::string key = lower_copy(trim_copy(text));
  if (key == "basic") return ClassSet::kBasic;
  if (key == "compound") return ClassSet::kCompound;
  throw Error(ErrorCode::SchemaError,
              "unknown class_set '" + std::string(text) + "'");
}

std::string_view basic_name(BasicEmotion e) {
  return kBasicNames[static_cast<std::size_t>(e)];
}

std::string_view compound_name(CompoundEmotion e) {
  return kCompoundNames[static_cast<std::size_t>(e)];
}

std::optional<BasicEmotion> parse_basic(std::string_view text) {
  const std::string key = lower_copy(trim_copy(text));
  for (std::size_t i = 0; i < kBasicNames.size(); ++i) {
    if (key == kBasicNames[i]) return static_cast<BasicEmotion>(i);
  }
  for (const auto& [alias, value] : kBasicAliases) {
    if (key == alias) return value;
  }
  return std::nullopt;
}

std::optional<CompoundEmotion> parse_compound(std::string_view text) {
  const std::string key = lower_copy(trim_copy(text));
  for (std::size_t i = 0; i < kCompoundNames.size(); ++i) {
    if (key == lower_copy(kCompoundNames[i])) {
      return static_cast<CompoundEmotion>(i);
    }
  }
  return std::nullopt;
}

std::pair<BasicEmotion, BasicEmotion> pair_of(CompoundEmotion compound) {
  if (compound == CompoundEmotion::kOther) {
    throw Error(ErrorCode::OtherHasNoPair,
                "the class Other maps to no basic-emotion pair");
  }
  return kPairTable[static_cast<std::size_t>(compound)];
}

const std::array<CompoundEmotion, 7>& evaluated_compounds() {
  static const std::array<CompoundEmotion, 7> kEvaluated = {
      CompoundEmotion::kAngrilySurprised,
      CompoundEmotion::kDisgustedlySurprised,
      CompoundEmotion::kFearfullySurprised,
      CompoundEmotion::kHappilySurprised,
      CompoundEmotion::kSadlyAngry,
      CompoundEmotion::kSadlyFearful,
      CompoundEmotion::kSadlySurprised,
  };
  return kEvaluated;
}

std::string trim_copy(std::string_view text) {
  const auto* first = text.begin();
  const auto* last = text.end();
  while (first != last && std::isspace(static_cast<unsigned char>(*first))) {
    ++first;
  }
  while (last != first && std::isspace(static_cast<unsigned char>(last[-1]))) {
    --last;
  }
  return std::string(first, last);
}

std::string lower_copy(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace cuecast
