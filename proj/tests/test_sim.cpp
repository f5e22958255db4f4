#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magicmap/crossbar_sim.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <sstream>

using namespace magicmap;
using namespace magicmap::testutil;

namespace {

struct mapped {
  non_netlist nn;
  placement pl;
  schedule sch;
};

mapped map_fa(map_options opt, bool refine)
{
  auto raw = parse_blif_file(fixture("full_adder.blif"));
  auto nn = translate(luts_from_raw(raw));
  if (refine)
    nn = refine_cascades(nn);
  mapped m;
  m.nn = std::move(nn);
  m.pl = place_supergates(m.nn, opt);
  m.sch = build_schedule(m.pl, opt);
  return m;
}

} // namespace

TEST_CASE("run: full adder (1,1,0) gives sum 0 carry 1")
{
  auto m = map_fa(map_options::hipe(), true);
  CHECK(run(m.sch, m.pl, {true, true, false}) == std::vector<bool>{false, true});
}

TEST_CASE("run: full adder matches arithmetic on all 8 patterns in both modes")
{
  for (bool baseline : {false, true}) {
    auto m = map_fa(baseline ? map_options::said_baseline() : map_options::hipe(), !baseline);
    for (unsigned p = 0; p < 8; ++p) {
      bool a = p & 1, b = p & 2, c = p & 4;
      auto [sum, carry] = full_adder_ref(a, b, c);
      CHECK(run(m.sch, m.pl, {a, b, c}) == std::vector<bool>{sum, carry});
    }
  }
}

TEST_CASE("run: a single NOT copy inverts its input")
{
  // hand-built: one PI at (0,0), one copy into (0,2)
  placement pl;
  pl.grid_rows = 4;
  pl.grid_cols = 4;
  pl.pi_home = {{0, 0}};
  cell_info home;
  home.role = cell_role::pi_home;
  home.signal = non_ref::pi(0);
  home.preload = {preload_info::kind::pi_plain, 0, false};
  pl.cells[{0, 0}] = home;
  cell_info out;
  out.role = cell_role::po_copy;
  out.signal = non_ref::pi(0);
  pl.cells[{0, 2}] = out;
  pl.po_cells = {{0, 2}};
  micro_op op;
  op.kind = op_kind::not_copy;
  op.inputs = {{0, 0}};
  op.output = {0, 2};
  schedule s;
  s.cycles.push_back({op});

  CHECK(run(s, pl, {false}) == std::vector<bool>{true});
  CHECK(run(s, pl, {true}) == std::vector<bool>{false});
}

TEST_CASE("run: reading an unwritten cell is a hard error")
{
  placement pl;
  pl.grid_rows = 4;
  pl.grid_cols = 4;
  pl.pi_home = {{0, 0}};
  cell_info home;
  home.role = cell_role::pi_home;
  home.signal = non_ref::pi(0);
  home.preload = {preload_info::kind::pi_plain, 0, false};
  pl.cells[{0, 0}] = home;
  pl.po_cells = {{1, 1}};
  micro_op op;
  op.kind = op_kind::not_copy;
  op.inputs = {{2, 1}}; // never written
  op.output = {1, 1};
  schedule s;
  s.cycles.push_back({op});
  CHECK_THROWS_WITH_AS(run(s, pl, {false}), doctest::Contains("uninitialized-read"), sim_error);
}

TEST_CASE("run: coordinates outside the grid are rejected")
{
  placement pl;
  pl.grid_rows = 2;
  pl.grid_cols = 2;
  pl.pi_home = {{0, 0}};
  cell_info home;
  home.role = cell_role::pi_home;
  home.signal = non_ref::pi(0);
  home.preload = {preload_info::kind::pi_plain, 0, false};
  pl.cells[{0, 0}] = home;
  pl.po_cells = {{0, 0}};
  micro_op op;
  op.kind = op_kind::not_copy;
  op.inputs = {{0, 0}};
  op.output = {0, 5};
  schedule s;
  s.cycles.push_back({op});
  CHECK_THROWS_AS(run(s, pl, {false}), sim_error);
}

TEST_CASE("verify_equivalence: full adder passes exhaustively")
{
  auto m = map_fa(map_options::hipe(), true);
  auto ref = from_raw(parse_blif_file(fixture("full_adder.blif")));
  auto v = verify_equivalence(m.sch, m.pl, ref, true, 0, 7);
  CHECK(v.pass);
  CHECK(v.vectors == 8);
}

TEST_CASE("verify_equivalence: deleting one NOR is caught with a counterexample")
{
  auto m = map_fa(map_options::hipe(), true);
  auto ref = from_raw(parse_blif_file(fixture("full_adder.blif")));
  schedule broken = m.sch;
  for (auto& cyc : broken.cycles) {
    bool removed = false;
    for (size_t i = 0; i < cyc.size(); ++i)
      if (cyc[i].kind == op_kind::nor_row) {
        cyc.erase(cyc.begin() + i);
        removed = true;
        break;
      }
    if (removed)
      break;
  }
  // the mutilated schedule either reads an unwritten cell or mis-evaluates
  bool detected = false;
  try {
    auto v = verify_equivalence(broken, m.pl, ref, true, 0, 7);
    detected = !v.pass;
    if (!v.pass)
      CHECK(!v.counterexample.empty());
  } catch (sim_error const&) {
    detected = true;
  }
  CHECK(detected);
}

TEST_CASE("verify_equivalence: random vectors on a mid-size pipeline result")
{
  auto raw = parse_blif_file(bench("randbig.blif"));
  auto ref = from_raw(raw);
  auto g = and_balance(ref);
  auto nl = map_luts(g, 4, 8, true);
  auto nn = refine_cascades(translate(nl));
  auto opt = map_options::hipe();
  auto pl = place_supergates(nn, opt);
  auto sch = build_schedule(pl, opt);
  auto v = verify_equivalence(sch, pl, ref, false, 1000, 42);
  CHECK(v.pass);
  CHECK(v.vectors == 1000);
}

TEST_CASE("flat trace round trip drives the simulator identically")
{
  auto m = map_fa(map_options::hipe(), true);
  auto text = emit_trace(m.sch);
  auto parsed = parse_trace(text);
  REQUIRE(parsed.num_cycles() == m.sch.num_cycles());
  for (unsigned p = 0; p < 8; ++p) {
    std::vector<bool> pat = {bool(p & 1), bool(p & 2), bool(p & 4)};
    CHECK(run(parsed, m.pl, pat) == run(m.sch, m.pl, pat));
  }
}

TEST_CASE("per-cycle state dumps name every written cell")
{
  auto m = map_fa(map_options::hipe(), true);
  std::ostringstream dump;
  run(m.sch, m.pl, {true, false, true}, &dump);
  auto text = dump.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == m.sch.num_cycles());
  CHECK(text.find("cycle 1:") != std::string::npos);
}
