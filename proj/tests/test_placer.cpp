#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magicmap/crossbar_sim.hpp"
#include "magicmap/scheduler.hpp"
#include "test_util.hpp"

using namespace magicmap;
using namespace magicmap::testutil;

namespace {

struct mapped {
  non_netlist nn;
  placement pl;
  schedule sch;
  stats st;
};

mapped map_raw(raw_netlist const& raw, map_options opt)
{
  auto nn = translate(luts_from_raw(raw));
  if (!opt.baseline_placement)
    nn = refine_cascades(nn);
  mapped m;
  m.nn = std::move(nn);
  m.pl = place_supergates(m.nn, opt);
  m.sch = build_schedule(m.pl, opt);
  m.st = count_stats(m.sch, m.pl);
  REQUIRE(check_schedule(m.sch, m.pl).empty());
  return m;
}

int aux_cells_of_gate(placement const& pl, non_netlist const& nn, std::string const& name)
{
  int g = -1;
  for (size_t i = 0; i < nn.gates.size(); ++i)
    if (nn.gates[i].name == name)
      g = static_cast<int>(i);
  REQUIRE(g >= 0);
  int n = 0;
  for (auto const& [coord, info] : pl.cells)
    if (info.role == cell_role::aux && info.signal == non_ref::gate(g))
      ++n;
  return n;
}

} // namespace

TEST_CASE("sort_supergates: descending size, stable ties")
{
  supergate s1, s2, s3;
  s1.terms.resize(1);
  s2.terms.resize(3);
  s3.terms.resize(2);
  std::vector<supergate const*> level = {&s1, &s2, &s3};
  CHECK(sort_supergates(level) == std::vector<int>{1, 2, 0});

  supergate t1, t2;
  t1.terms.resize(2);
  t2.terms.resize(2);
  std::vector<supergate const*> tie = {&t1, &t2};
  CHECK(sort_supergates(tie) == std::vector<int>{0, 1});
}

TEST_CASE("flip_supergates guard: odd levels flip, flipping twice is identity")
{
  CHECK(flip_level(1));
  CHECK_FALSE(flip_level(2));
  CHECK(flip_level(3));
  bool orientation = false;
  orientation = !orientation;
  orientation = !orientation;
  CHECK_FALSE(orientation);
}

TEST_CASE("placement: single supergate sits at the band origin")
{
  auto raw = parse_blif_string(".model m\n.inputs a b\n.outputs y\n.names a b y\n00 1\n.end\n");
  auto m = map_raw(raw, map_options::hipe());
  REQUIRE(m.pl.tiles.size() == 1);
  auto const& t = m.pl.tiles[0];
  CHECK(t.level == 1);
  CHECK(t.y == 1);
  CHECK(t.flipped); // level 1 is vertically flipped
  CHECK(t.anchor_row == 0);
  // first band starts right after the input band
  int min_col = 1 << 30;
  for (auto const& [coord, info] : m.pl.cells)
    if (coord.col >= m.pl.input_band_cols)
      min_col = std::min(min_col, coord.col);
  CHECK(min_col == m.pl.input_band_cols);
}

TEST_CASE("placement: cascaded pairs share the producer output cell")
{
  // two independent chains; each consumer anchors on its producer
  auto raw = parse_blif_string(".model m\n.inputs a b c d\n.outputs y z\n"
                               ".names a b g1\n11 1\n"
                               ".names g1 c y\n11 1\n"
                               ".names c d g2\n00 1\n"
                               ".names g2 d z\n1- 1\n-1 1\n.end\n");
  auto m = map_raw(raw, map_options::hipe());
  int anchored = 0;
  for (auto const& t : m.pl.tiles)
    if (t.shared_term >= 0)
      ++anchored;
  CHECK(anchored == 2);
  // the shared literal cell is literally the producer's gate output cell
  for (auto const& t : m.pl.tiles) {
    if (t.shared_term < 0)
      continue;
    auto cell = t.lit_cells[t.shared_term][t.shared_lit];
    auto const& info = m.pl.cells.at(cell);
    CHECK(info.role == cell_role::gate_out);
  }
}

TEST_CASE("alignment sharing: fanout-3 costs 1 aux + 4 copy cycles shared, 3 aux + 6 unshared")
{
  // gb fans out to three consumers whose first literal anchors elsewhere, so
  // all three deliveries are polarity-preserving double NOTs through
  // auxiliaries
  auto raw = parse_blif_string(
      ".model m\n.inputs a b x1 y1 x2 y2 x3 y3\n.outputs o1 o2 o3\n"
      ".names a b g\n00 1\n"
      ".names g gb\n1 1\n"
      ".names x1 y1 d1\n11 1\n"
      ".names d1 x1 e1\n11 1\n"
      ".names x2 y2 d2\n11 1\n"
      ".names d2 x2 e2\n11 1\n"
      ".names x3 y3 d3\n11 1\n"
      ".names d3 x3 e3\n11 1\n"
      ".names e1 gb o1\n11 1\n"
      ".names e2 gb o2\n11 1\n"
      ".names e3 gb o3\n11 1\n.end\n");

  auto opt_shared = map_options::hipe();
  auto opt_unshared = map_options::hipe();
  opt_unshared.share_aux = false;

  auto shared = map_raw(raw, opt_shared);
  auto unshared = map_raw(raw, opt_unshared);

  // copy cycles are those carrying alignment ops, excluding the one-off
  // complemented-input provisioning in the input band
  auto copy_cycles = [&](schedule const& s) {
    int n = 0;
    for (auto const& cyc : s.cycles)
      for (auto const& op : cyc)
        if (op.is_alignment && op.output.col >= shared.pl.input_band_cols) {
          ++n;
          break;
        }
    return n;
  };
  CHECK(copy_cycles(shared.sch) == 4);   // one shared first NOT + 3 second NOTs
  CHECK(copy_cycles(unshared.sch) == 6); // per-destination double NOTs
  CHECK(aux_cells_of_gate(shared.pl, shared.nn, "gb") == 1);
  CHECK(aux_cells_of_gate(unshared.pl, unshared.nn, "gb") == 3);

  // sharing must never lose on the headline metrics
  CHECK(shared.st.cycles <= unshared.st.cycles);
  CHECK(shared.st.mems <= unshared.st.mems);
  CHECK(unshared.st.mems - shared.st.mems == 2);
}

TEST_CASE("alignment sharing: fanout-1 signal is unchanged by the toggle")
{
  auto raw = parse_blif_string(".model m\n.inputs a b c\n.outputs y\n"
                               ".names a b g\n11 1\n"
                               ".names g c y\n11 1\n.end\n");
  auto opt_unshared = map_options::hipe();
  opt_unshared.share_aux = false;
  auto shared = map_raw(raw, map_options::hipe());
  auto unshared = map_raw(raw, opt_unshared);
  CHECK(shared.st.cycles == unshared.st.cycles);
  CHECK(shared.st.mems == unshared.st.mems);
}

TEST_CASE("sharing never increases cycles or memristors (random netlists)")
{
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    auto raw = random_raw(seed, 4 + seed % 5, 6 + static_cast<int>(seed % 12), 2);
    auto opt_off = map_options::hipe();
    opt_off.share_aux = false;
    auto on = map_raw(raw, map_options::hipe());
    auto off = map_raw(raw, opt_off);
    CHECK(on.st.cycles <= off.st.cycles);
    CHECK(on.st.mems <= off.st.mems);
  }
}

TEST_CASE("baseline placement: smaller-than-above rule pushes tiles down")
{
  auto raw = parse_blif_file(fixture("full_adder.blif"));
  auto m = map_raw(raw, map_options::said_baseline());
  // level-2 supergates are as large as the level-1 one, so the slot above
  // is forbidden and they land at y = 2 and y = 3
  std::map<std::string, int> y;
  for (auto const& t : m.pl.tiles)
    y[m.nn.gates[t.gate].name] = t.y;
  CHECK(y["x"] == 1);
  CHECK(y["sum"] == 2);
  CHECK(y["carry"] == 3);
  for (auto const& t : m.pl.tiles)
    CHECK_FALSE(t.flipped);
}

TEST_CASE("grid capacity is enforced")
{
  auto raw = parse_blif_file(fixture("full_adder.blif"));
  auto nn = refine_cascades(translate(luts_from_raw(raw)));
  auto opt = map_options::hipe();
  opt.grid_rows = 4;
  opt.grid_cols = 4;
  CHECK_THROWS_WITH_AS(place_supergates(nn, opt), doctest::Contains("capacity-exceeded"),
                       mca_error);
}

TEST_CASE("per-level term totals respect the grid row budget")
{
  auto raw = parse_blif_file(fixture("full_adder.blif"));
  auto nn = refine_cascades(translate(luts_from_raw(raw)));
  auto opt = map_options::hipe();
  opt.grid_rows = 1; // level 1 alone has two terms
  CHECK_THROWS_WITH_AS(place_supergates(nn, opt), doctest::Contains("capacity-exceeded"),
                       mca_error);
}

TEST_CASE("no cell is ever written twice and tiles stay inside the grid")
{
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    auto raw = random_raw(seed, 5, 12, 3);
    for (auto opt : {map_options::hipe(), map_options::said_baseline()}) {
      auto nn = translate(luts_from_raw(raw));
      if (!opt.baseline_placement)
        nn = refine_cascades(nn);
      auto pl = place_supergates(nn, opt);
      auto sch = build_schedule(pl, opt);
      CHECK(check_schedule(sch, pl).empty());
      CHECK(pl.used_rows <= pl.grid_rows);
      CHECK(pl.used_cols <= pl.grid_cols);
    }
  }
}
