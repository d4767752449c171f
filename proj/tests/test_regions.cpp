#include <doctest.h>

#include <random>
#include <set>

#include "dcreid/errors.hpp"
#include "dcreid/regions.hpp"
#include "helpers.hpp"

using namespace dcreid;
using testutil::make_mask;
using testutil::make_quantized;

TEST_CASE("color_mask selects matching cells in range") {
  auto q = make_quantized(2, 2, {8, 0, 8, QuantizedImage::kMaskedCell});
  auto mask = color_mask(q, 8, RowRange{0, 2});
  CHECK(mask.bits == std::vector<std::uint8_t>{1, 0, 1, 0});
  auto absent = color_mask(q, 40, RowRange{0, 2});
  CHECK(absent.bits == std::vector<std::uint8_t>{0, 0, 0, 0});
  auto upper_only = color_mask(q, 8, RowRange{0, 1});
  CHECK(upper_only.bits == std::vector<std::uint8_t>{1, 0, 0, 0});
}

TEST_CASE("connectivity 4 vs 8 on a diagonal pair") {
  auto mask = make_mask(2, 2, {1, 0, 0, 1});
  CHECK(connected_components(mask, 4).size() == 2);
  CHECK(connected_components(mask, 8).size() == 1);
}

TEST_CASE("connected_components trivial cases") {
  CHECK(connected_components(make_mask(3, 3, std::vector<std::uint8_t>(9, 0)), 8).empty());
  auto full = connected_components(make_mask(3, 3, std::vector<std::uint8_t>(9, 1)), 4);
  REQUIRE(full.size() == 1);
  CHECK(full[0].area() == 9);
  CHECK_THROWS_AS(connected_components(make_mask(1, 1, {1}), 6), ArgumentError);
}

TEST_CASE("components match the label-propagation oracle on random masks") {
  std::mt19937 rng(31);
  std::bernoulli_distribution bit(0.4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint8_t> bits(16 * 16);
    for (auto& b : bits) b = bit(rng);
    auto mask = make_mask(16, 16, bits);
    for (int conn : {4, 8}) {
      auto got = connected_components(mask, conn);
      auto want = testutil::oracle_components(mask, conn);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].pixels == want[i]);
    }
  }
}

TEST_CASE("filter_noise drops areas below threshold") {
  std::vector<Component> comps(4);
  comps[0].pixels.resize(1);
  comps[1].pixels.resize(4);
  comps[2].pixels.resize(5);
  comps[3].pixels.resize(100);
  auto kept = filter_noise(comps, 5);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].area() == 5);
  CHECK(kept[1].area() == 100);
  CHECK(filter_noise(comps, 1).size() == 4);
  CHECK(filter_noise({}, 5).empty());
  CHECK_THROWS_AS(filter_noise(comps, 0), ArgumentError);
}

TEST_CASE("region_stats single pixel") {
  Component comp;
  comp.pixels = {3 * 10 + 2};  // (x=2, y=3) on a 10-wide mask
  auto r = region_stats(comp, 10, 8, BodyPart::Upper, 10);
  CHECK(r.mbr == Mbr{2, 3, 1, 1});
  CHECK(r.center_y == doctest::Approx(0.35));
  CHECK(r.mbr_height == doctest::Approx(0.1));
  CHECK(r.area == 1);
}

TEST_CASE("region_stats full-height strip and horizontal pair") {
  Component strip;
  for (int y = 0; y < 10; ++y) strip.pixels.push_back(y * 10);
  auto r = region_stats(strip, 10, 0, BodyPart::Lower, 10);
  CHECK(r.center_y == doctest::Approx(0.5));
  CHECK(r.mbr_height == doctest::Approx(1.0));

  Component pair;
  pair.pixels = {0, 5};  // (0,0) and (5,0)
  auto p = region_stats(pair, 10, 0, BodyPart::Upper, 10);
  CHECK(p.mbr == Mbr{0, 0, 6, 1});

  CHECK_THROWS_AS(region_stats(Component{}, 10, 0, BodyPart::Upper, 10), ArgumentError);
}

TEST_CASE("extract_dcrs basic shapes") {
  // uniform single-color part
  auto uniform = make_quantized(4, 4, std::vector<std::uint8_t>(16, 8));
  DcdSet dcds;
  dcds.entries = {{8, 1.0}};
  auto set = extract_dcrs(uniform, dcds, BodyPart::Upper, RowRange{0, 4}, 8, 5);
  REQUIRE(set.regions.size() == 1);
  CHECK(set.regions[0].area == 16);
  CHECK(set.regions[0].mbr == Mbr{0, 0, 4, 4});

  // empty DcdSet
  CHECK(extract_dcrs(uniform, DcdSet{}, BodyPart::Upper, RowRange{0, 4}, 8, 5).empty());
}

TEST_CASE("extract_dcrs two blobs and a speck") {
  // 8x8: two 3x3 red blobs (area 9) far apart, one 2-pixel red speck
  auto q = make_quantized(8, 8, std::vector<std::uint8_t>(64, 0));
  auto set_red = [&](int x, int y) { q.cells[y * 8 + x] = 8; };
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) set_red(x, y);
  for (int y = 5; y < 8; ++y)
    for (int x = 5; x < 8; ++x) set_red(x, y);
  set_red(0, 7);
  set_red(1, 7);

  DcdSet dcds;
  dcds.entries = {{8, 0.5}, {0, 0.5}};
  auto set = extract_dcrs(q, dcds, BodyPart::Upper, RowRange{0, 8}, 8, 5);
  int red_regions = 0;
  for (const auto& r : set.regions)
    if (r.color == 8) ++red_regions;
  CHECK(red_regions == 2);
}

TEST_CASE("regions of one color partition the pre-filter mask") {
  std::mt19937 rng(37);
  std::bernoulli_distribution bit(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint8_t> cells(64);
    for (auto& c : cells) c = bit(rng) ? 8 : 0;
    auto q = make_quantized(8, 8, cells);
    auto mask = color_mask(q, 8, RowRange{0, 8});
    auto comps = connected_components(mask, 8);
    std::set<std::int32_t> covered;
    for (const auto& comp : comps)
      for (auto idx : comp.pixels) CHECK(covered.insert(idx).second);  // disjoint
    std::size_t mask_bits = 0;
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
      if (mask.bits[i]) {
        ++mask_bits;
        CHECK(covered.count(static_cast<std::int32_t>(i)) == 1);
      }
    }
    CHECK(covered.size() == mask_bits);
  }
}

TEST_CASE("every emitted region respects min_area") {
  std::mt19937 rng(41);
  std::bernoulli_distribution bit(0.3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::uint8_t> cells(144);
    for (auto& c : cells) c = bit(rng) ? 8 : 1;
    auto q = make_quantized(12, 12, cells);
    DcdSet dcds;
    dcds.entries = {{8, 0.5}, {1, 0.5}};
    for (const auto& r :
         extract_dcrs(q, dcds, BodyPart::Lower, RowRange{0, 12}, 4, 5).regions)
      CHECK(r.area >= 5);
  }
}
