#include <doctest.h>

#include <set>

#include "cuecast/error.hpp"
#include "cuecast/taxonomy.hpp"

using namespace cuecast;

TEST_SUITE_BEGIN("taxonomy");

TEST_CASE("basic ids follow alphabetical name order") {
  CHECK(basic_name(BasicEmotion::kAnger) == "anger");
  CHECK(basic_name(BasicEmotion::kDisgust) == "disgust");
  CHECK(basic_name(BasicEmotion::kFear) == "fear");
  CHECK(basic_name(BasicEmotion::kJoy) == "joy");
  CHECK(basic_name(BasicEmotion::kNeutral) == "neutral");
  CHECK(basic_name(BasicEmotion::kSadness) == "sadness");
  CHECK(basic_name(BasicEmotion::kSurprise) == "surprise");
  for (std::size_t i = 1; i < kBasicCount; ++i) {
    CHECK(basic_name(static_cast<BasicEmotion>(i - 1)) <
          basic_name(static_cast<BasicEmotion>(i)));
  }
}

TEST_CASE("compound ids follow alphabetical name order with Other in place") {
  CHECK(compound_name(CompoundEmotion::kAngrilySurprised) ==
        "Angrily Surprised");
  CHECK(compound_name(CompoundEmotion::kDisgustedlySurprised) ==
        "Disgustedly Surprised");
  CHECK(compound_name(CompoundEmotion::kFearfullySurprised) ==
        "Fearfully Surprised");
  CHECK(compound_name(CompoundEmotion::kHappilySurprised) ==
        "Happily Surprised");
  CHECK(compound_name(CompoundEmotion::kOther) == "Other");
  CHECK(compound_name(CompoundEmotion::kSadlyAngry) == "Sadly Angry");
  CHECK(compound_name(CompoundEmotion::kSadlyFearful) == "Sadly Fearful");
  CHECK(compound_name(CompoundEmotion::kSadlySurprised) == "Sadly Surprised");
  CHECK(static_cast<int>(CompoundEmotion::kOther) == 4);
}

TEST_CASE("basic parsing is case-insensitive, trims, and resolves aliases") {
  CHECK(parse_basic("joy") == BasicEmotion::kJoy);
  CHECK(parse_basic("happy") == BasicEmotion::kJoy);
  CHECK(parse_basic("Happiness") == BasicEmotion::kJoy);
  CHECK(parse_basic("happily") == BasicEmotion::kJoy);
  CHECK(parse_basic(" JOY ") == BasicEmotion::kJoy);
  CHECK(parse_basic("SURPRISE") == BasicEmotion::kSurprise);
  CHECK_FALSE(parse_basic("contempt").has_value());
  CHECK_FALSE(parse_basic("").has_value());
}

TEST_CASE("compound parsing is case-insensitive and trims") {
  CHECK(parse_compound("Sadly Angry") == CompoundEmotion::kSadlyAngry);
  CHECK(parse_compound("sadly angry") == CompoundEmotion::kSadlyAngry);
  CHECK(parse_compound("  OTHER ") == CompoundEmotion::kOther);
  CHECK(parse_compound("Fearfully Surprised") ==
        CompoundEmotion::kFearfullySurprised);
  CHECK_FALSE(parse_compound("Angrily Disgusted").has_value());
}

TEST_CASE("every named compound maps to its basic pair") {
  using B = BasicEmotion;
  using C = CompoundEmotion;
  CHECK(pair_of(C::kAngrilySurprised) == std::pair{B::kAnger, B::kSurprise});
  CHECK(pair_of(C::kDisgustedlySurprised) ==
        std::pair{B::kDisgust, B::kSurprise});
  CHECK(pair_of(C::kFearfullySurprised) == std::pair{B::kFear, B::kSurprise});
  CHECK(pair_of(C::kHappilySurprised) == std::pair{B::kJoy, B::kSurprise});
  CHECK(pair_of(C::kSadlyAngry) == std::pair{B::kSadness, B::kAnger});
  CHECK(pair_of(C::kSadlyFearful) == std::pair{B::kSadness, B::kFear});
  CHECK(pair_of(C::kSadlySurprised) == std::pair{B::kSadness, B::kSurprise});
}

TEST_CASE("Other has no basic pair") {
  CHECK_THROWS_AS(pair_of(CompoundEmotion::kOther), Error);
  try {
    pair_of(CompoundEmotion::kOther);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OtherHasNoPair);
  }
}

TEST_CASE("the evaluated compound set is the seven non-Other classes") {
  const auto& evaluated = evaluated_compounds();
  CHECK(evaluated.size() == 7);
  std::set<CompoundEmotion> seen(evaluated.begin(), evaluated.end());
  CHECK(seen.size() == 7);
  CHECK(seen.count(CompoundEmotion::kOther) == 0);
  for (std::size_t i = 1; i < evaluated.size(); ++i) {
    CHECK(static_cast<int>(evaluated[i - 1]) < static_cast<int>(evaluated[i]));
  }
}

TEST_CASE("class set helpers") {
  CHECK(class_count(ClassSet::kBasic) == 7);
  CHECK(class_count(ClassSet::kCompound) == 8);
  CHECK(class_set_name(ClassSet::kBasic) == "basic");
  CHECK(class_set_name(ClassSet::kCompound) == "compound");
  CHECK(parse_class_set("basic") == ClassSet::kBasic);
  CHECK(parse_class_set("compound") == ClassSet::kCompound);
  CHECK_THROWS_AS(parse_class_set("both"), Error);
}

TEST_CASE("trim and lower helpers") {
  CHECK(trim_copy("  a b \t") == "a b");
  CHECK(trim_copy("") == "");
  CHECK(lower_copy("Sadly ANGRY") == "sadly angry");
}

TEST_SUITE_END();
