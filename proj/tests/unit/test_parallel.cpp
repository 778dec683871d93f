#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuecast/parallel.hpp"

using namespace cuecast;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value == nullptr) {
      unsetenv("CUECAST_THREADS");
    } else {
      setenv("CUECAST_THREADS", value, 1);
    }
  }
  ~EnvGuard() { unsetenv("CUECAST_THREADS"); }
};

}  // namespace

TEST_SUITE_BEGIN("parallel");

TEST_CASE("parallel_map returns results in index order at any cap") {
  auto square = [](std::size_t i) { return i * i; };
  std::vector<std::size_t> want(100);
  for (std::size_t i = 0; i < want.size(); ++i) want[i] = i * i;
  for (std::size_t cap : {1u, 2u, 3u, 8u, 64u}) {
    CHECK(parallel_map(100, square, cap) == want);
  }
  CHECK(parallel_map(0, square, 4).empty());
  CHECK(parallel_map(1, square, 8) == std::vector<std::size_t>{0});
}

TEST_CASE("parallel runs match the serial run on non-trivial payloads") {
  auto work = [](std::size_t i) {
    std::string s;
    for (std::size_t j = 0; j <= i % 17; ++j) {
      s += std::to_string(i * 31 + j) + ",";
    }
    return s;
  };
  const auto serial = parallel_map(400, work, 1);
  CHECK(parallel_map(400, work, 8) == serial);
  CHECK(parallel_map(400, work, 5) == serial);
}

TEST_CASE("the first worker exception propagates to the caller") {
  auto boom = [](std::size_t i) -> int {
    if (i == 37) throw std::runtime_error("item 37 failed");
    return static_cast<int>(i);
  };
  CHECK_THROWS_WITH_AS(parallel_map(100, boom, 4), "item 37 failed",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parallel_map(100, boom, 1), "item 37 failed",
                       std::runtime_error);
}

TEST_CASE("the thread cap honours CUECAST_THREADS") {
  {
    EnvGuard env("3");
    CHECK(thread_cap() == 3);
  }
  {
    EnvGuard env("1");
    CHECK(thread_cap() == 1);
  }
  {
    EnvGuard env(nullptr);
    CHECK(thread_cap() >= 1);
  }
  // Unusable values fall back to the hardware default instead of failing.
  for (const char* bad : {"0", "-2", "lots", ""}) {
    EnvGuard env(bad);
    CHECK(thread_cap() >= 1);
  }
}

TEST_SUITE_END();
