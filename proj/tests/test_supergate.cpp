#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magicmap/supergate.hpp"
#include "test_util.hpp"

using namespace magicmap;
using namespace magicmap::testutil;

namespace {

// reference NOR-of-NORs evaluation of a standalone supergate over leaves
bool eval_sg(supergate const& sg, std::vector<bool> const& leaves)
{
  bool outer_or = false;
  for (auto const& term : sg.terms) {
    bool any = false;
    for (auto const& lit : term) {
      bool v = leaves[lit.signal.index];
      any = any || (lit.positive ? !v : v);
    }
    outer_or = outer_or || !any;
  }
  return sg.emit_final_not ? outer_or : !outer_or;
}

sop_cover cover_of(std::vector<std::string> cubes, unsigned leaves)
{
  sop_cover c;
  c.num_leaves = leaves;
  for (auto& s : cubes)
    c.cubes.push_back({std::move(s)});
  return c;
}

} // namespace

TEST_CASE("sop_to_non: single positive literal becomes one single-input term")
{
  auto sg = sop_to_non(cover_of({"1"}, 1));
  REQUIRE(sg.terms.size() == 1);
  REQUIRE(sg.terms[0].size() == 1);
  CHECK(sg.terms[0][0].positive); // term cell reads NOT(a)
  CHECK(sg.emit_final_not);
  CHECK(eval_sg(sg, {false}) == false);
  CHECK(eval_sg(sg, {true}) == true); // double negation wires through
}

TEST_CASE("sop_to_non: majority cover gives three two-input terms")
{
  auto sg = sop_to_non(cover_of({"11-", "1-1", "-11"}, 3));
  REQUIRE(sg.terms.size() == 3);
  for (auto const& t : sg.terms)
    CHECK(t.size() == 2);
  for (unsigned m = 0; m < 8; ++m) {
    std::vector<bool> leaves = {bool(m & 1), bool(m & 2), bool(m & 4)};
    CHECK(eval_sg(sg, leaves) == (__builtin_popcount(m) >= 2));
  }
}

TEST_CASE("sop_to_non: full-adder carry LUT keeps its two-term tile shape")
{
  auto raw = parse_blif_file(fixture("full_adder.blif"));
  auto nn = translate(luts_from_raw(raw));
  REQUIRE(nn.gates.size() == 3);
  CHECK(nn.gates[2].name == "carry");
  CHECK(nn.gates[2].size() == 2);
  CHECK(nn.gates[0].size() == 2);
  CHECK(nn.num_levels() == 2);
}

TEST_CASE("translate folds constant LUTs into preset values")
{
  auto raw = parse_blif_string(".model m\n.inputs a\n.outputs y z\n"
                               ".names k1\n1\n"
                               ".names a k1 y\n11 1\n"
                               ".names k0\n0\n"
                               ".names a k0 z\n1- 1\n-1 1\n.end\n");
  auto nn = translate(luts_from_raw(raw));
  // y = a AND 1 = a; z = a OR 0 = a; no constant literal remains
  for (auto const& g : nn.gates)
    for (auto const& t : g.terms)
      for (auto const& lit : t)
        CHECK_FALSE(lit.signal.is_const());
  CHECK(nn.eval({true}) == std::vector<bool>{true, true});
  CHECK(nn.eval({false}) == std::vector<bool>{false, false});
}

TEST_CASE("refine_cascades clears internal NOTs only and reduces op count")
{
  auto raw = parse_blif_file(fixture("full_adder.blif"));
  auto nn = translate(luts_from_raw(raw));
  int before = nn.op_count();
  auto refined = refine_cascades(nn);
  int after = refined.op_count();
  CHECK(after == before - 1); // exactly the internal xor gate loses its NOT
  CHECK_FALSE(refined.gates[0].emit_final_not);
  CHECK(refined.gates[1].emit_final_not);
  CHECK(refined.gates[2].emit_final_not);

  // refinement never changes the evaluated function
  for (unsigned m = 0; m < 8; ++m) {
    std::vector<bool> pat = {bool(m & 1), bool(m & 2), bool(m & 4)};
    CHECK(nn.eval(pat) == refined.eval(pat));
  }
}

TEST_CASE("refine_cascades: op count after <= before, equality when all gates drive POs")
{
  auto raw = parse_blif_string(".model m\n.inputs a b\n.outputs x y\n"
                               ".names a b x\n11 1\n.names a b y\n1- 1\n-1 1\n.end\n");
  auto nn = translate(luts_from_raw(raw));
  auto refined = refine_cascades(nn);
  CHECK(refined.op_count() == nn.op_count()); // every gate drives a PO
}

TEST_CASE("mixed fanout: a gate feeding both a PO and an internal consumer keeps its NOT")
{
  // y drives both the output and the internal consumer z
  auto raw = parse_blif_string(".model m\n.inputs a b c\n.outputs y z\n"
                               ".names a b y\n11 1\n"
                               ".names y c z\n11 1\n.end\n");
  auto nn = translate(luts_from_raw(raw));
  auto refined = refine_cascades(nn);
  CHECK(refined.gates[0].emit_final_not); // PO path keeps the final NOT
  CHECK(refined.gates[1].emit_final_not);
  for (unsigned m = 0; m < 8; ++m) {
    std::vector<bool> pat = {bool(m & 1), bool(m & 2), bool(m & 4)};
    CHECK(refined.eval(pat) == eval_raw(raw, pat));
  }
}

TEST_CASE("non_netlist evaluation equals LUT evaluation on random netlists")
{
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto raw = random_raw(seed, 5, 10, 3);
    auto nl = luts_from_raw(raw);
    auto nn = translate(nl);
    auto refined = refine_cascades(nn);
    for (unsigned m = 0; m < 32; ++m) {
      std::vector<bool> pat(5);
      for (int i = 0; i < 5; ++i)
        pat[i] = (m >> i) & 1;
      auto expect = nl.eval(pat);
      CHECK(nn.eval(pat) == expect);
      CHECK(refined.eval(pat) == expect);
    }
  }
}

TEST_CASE("sop_to_non rejects degenerate covers")
{
  CHECK_THROWS_AS(sop_to_non(cover_of({}, 2)), std::invalid_argument);
  CHECK_THROWS_AS(sop_to_non(cover_of({"--"}, 2)), std::invalid_argument);
}
