#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace cuecast {

// The two class sets used throughout: seven basic emotions, and the seven
// challenge compounds plus the catch-all "Other". Ids follow alphabetical
// order of the canonical names; every vector and file in the toolkit uses
// that ordering.
enum class BasicEmotion : std::uint8_t {
  kAnger = 0,
  kDisgust = 1,
  kFear = 2,
  kJoy = 3,
  kNeutral = 4,
  kSadness = 5,
  kSurprise = 6,
};

enum class CompoundEmotion : std::uint8_t {
  kAngrilySurprised = 0,
  kDisgustedlySurprised = 1,
  kFearfullySurprised = 2,
  kHappilySurprised = 3,
  kOther = 4,
  kSadlyAngry = 5,
  kSadlyFearful = 6,
  kSadlySurprised = 7,
};

enum class ClassSet : std::uint8_t { kBasic, kCompound };

inline constexpr std::size_t kBasicCount = 7;
inline constexpr std::size_t kCompoundCount = 8;

std::size_t class_count(ClassSet set);
std::string_view class_set_name(ClassSet set);
ClassSet parse_class_set(std::string_view text);  // "basic" | "compound"

std::string_view basic_name(BasicEmotion e);
std::string_view compound_name(CompoundEmotion e);

// Case-insensitive, whitespace-trimmed lookup. "happy"/"happiness" resolve
// to joy; compound names match with any casing ("sadly angry").
std::optional<BasicEmotion> parse_basic(std::string_view text);
std::optional<CompoundEmotion> parse_compound(std::string_view text);

// The (basic, basic) pair named by each compound. Other is unmapped and
// raises Error{OtherHasNoPair}.
std::pair<BasicEmotion, BasicEmotion> pair_of(CompoundEmotion compound);

// The classes Eq.-style evaluation runs over: all seven basic emotions, or
// the seven compounds with Other removed.
const std::array<CompoundEmotion, 7>& evaluated_compounds();

std::string trim_copy(std::string_view text);
std::string lower_copy(std::string_view text);

}  // namespace cuecast
