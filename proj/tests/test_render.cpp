#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

#include "lozenge/render.hpp"

using namespace lozenge;

namespace {

// Unit triangles of a lozenge: upper (t, x) has corners (t,x) (t,x+1)
// (t+1,x+1); lower (t, x) has corners (t,x) (t+1,x) (t+1,x+1).
using Tri = std::tuple<bool, Int, Int>;  // (upper?, t, x)

std::pair<Tri, Tri> triangles(const Lozenge& l) {
  switch (l.type) {
    case LozengeType::stay: return {{true, l.t, l.x}, {false, l.t, l.x}};
    case LozengeType::jump: return {{true, l.t, l.x}, {false, l.t, l.x + 1}};
    case LozengeType::empty: return {{true, l.t, l.x}, {false, l.t - 1, l.x}};
  }
  return {};
}

void check_tiling(const EnsembleSpec& spec, const Configuration& c) {
  const auto tiles = lozenges(spec, c);
  std::set<Tri> seen;
  std::size_t stays = 0, jumps = 0;
  for (const auto& l : tiles) {
    auto [up, down] = triangles(l);
    CHECK(seen.insert(up).second);
    CHECK(seen.insert(down).second);
    if (l.type == LozengeType::stay) ++stays;
    if (l.type == LozengeType::jump) ++jumps;
  }
  // Every walker step is exactly one stay or jump lozenge.
  CHECK(stays + jumps == spec.n * static_cast<std::size_t>(spec.steps));
  CHECK(std::is_sorted(tiles.begin(), tiles.end(), [](const Lozenge& a, const Lozenge& b) {
    return std::tie(a.t, a.x) < std::tie(b.t, b.x);
  }));
}

}  // namespace

TEST_CASE("order-1 tilings have three lozenges") {
  const auto spec = EnsembleSpec::halfhex(1);
  const auto all = enumerate_configurations(spec);
  REQUIRE(all.size() == 2);
  for (const auto& c : all) {
    CHECK(lozenges(spec, c).size() == 3);
    check_tiling(spec, c);
  }
}

TEST_CASE("every half-hexagon tiling covers each triangle once") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto spec = EnsembleSpec::halfhex(n);
    std::set<std::vector<Lozenge>> distinct;
    for_each_configuration(spec, [&](const Configuration& c) {
      const auto tiles = lozenges(spec, c);
      CHECK(tiles.size() == 3 * n * (n + 1) / 2);
      check_tiling(spec, c);
      distinct.insert(tiles);
    });
    // Different configurations give different tilings.
    CHECK(Integer(static_cast<unsigned long>(distinct.size())) == count_lgv(spec));
  }
}

TEST_CASE("all tilings of one region cover the same triangles") {
  for (const auto& spec : {EnsembleSpec::halfhex(3), EnsembleSpec::with_ends(4, {3, 5}),
                           EnsembleSpec::with_ends(3, {1, 3, 5})}) {
    std::optional<std::set<Tri>> region;
    for_each_configuration(spec, [&](const Configuration& c) {
      std::set<Tri> cover;
      for (const auto& l : lozenges(spec, c)) {
        auto [up, down] = triangles(l);
        cover.insert(up);
        cover.insert(down);
      }
      if (!region) region = cover;
      CHECK(cover == *region);
    });
  }
}

TEST_CASE("general ensembles tile") {
  for (const auto& spec : {EnsembleSpec::with_ends(4, {3, 5}), EnsembleSpec::with_ends(3, {1, 3, 5}),
                           EnsembleSpec::with_ends(5, {2, 4, 7})})
    for_each_configuration(spec, [&](const Configuration& c) { check_tiling(spec, c); });
}

TEST_CASE("order-20 sample has 630 lozenges") {
  const auto spec = EnsembleSpec::halfhex(20);
  const auto c = sample(spec, 7);
  const auto tiles = lozenges(spec, c);
  CHECK(tiles.size() == 630);
  check_tiling(spec, c);
}

TEST_CASE("region column") {
  const auto spec = EnsembleSpec::halfhex(2);
  CHECK(region_column(spec, 0) == std::pair<Int, Int>{1, 2});
  CHECK(region_column(spec, 3) == std::pair<Int, Int>{2, 4});
  CHECK(region_column(spec, 1) == std::pair<Int, Int>{1, 3});
  CHECK(region_column(spec, 2) == std::pair<Int, Int>{1, 4});
}

TEST_CASE("invalid configurations are rejected") {
  const auto spec = EnsembleSpec::halfhex(2);
  Configuration bad{{{1, 2}, {1, 2}, {1, 2}, {1, 2}}};
  CHECK_THROWS_AS(lozenges(spec, bad), std::invalid_argument);
  CHECK_THROWS_AS(render(spec, bad, RenderMode::lozenges, RenderFormat::svg), std::invalid_argument);
}

TEST_CASE("ascii output") {
  const auto spec = EnsembleSpec::halfhex(3);
  const auto c = sample(spec, 3);
  const std::string paths = render(spec, c, RenderMode::paths, RenderFormat::ascii);
  CHECK(parse_configuration(paths) == c);

  const std::string grid = render(spec, c, RenderMode::lozenges, RenderFormat::ascii);
  std::size_t marks = 0;
  for (char ch : grid)
    if (ch == '-' || ch == '/' || ch == 'o') ++marks;
  CHECK(marks == lozenges(spec, c).size());
}

TEST_CASE("svg output is deterministic and well formed") {
  const auto spec = EnsembleSpec::halfhex(4);
  const auto c = sample(spec, 11);
  for (auto mode : {RenderMode::paths, RenderMode::lozenges}) {
    const std::string a = render(spec, c, mode, RenderFormat::svg);
    CHECK(a == render(spec, c, mode, RenderFormat::svg));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    auto count = [&](const std::string& needle) {
      std::size_t k = 0;
      for (auto p = a.find(needle); p != std::string::npos; p = a.find(needle, p + 1)) ++k;
      return k;
    };
    if (mode == RenderMode::lozenges) CHECK(count("<polygon") == 30);
    else CHECK(count("<polyline") == 4);
  }
}
