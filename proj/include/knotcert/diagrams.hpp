#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/braid3.hpp"

namespace knotcert {

struct PDError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Oriented crossing: arcs counterclockwise starting at the incoming under
// arc, so arcs[0] -> arcs[2] is the under strand. sign = +1 when the over
// strand runs arcs[3] -> arcs[1] (right-handed).
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;
  bool operator==(const Crossing&) const = default;
};

struct PDCode {
  std::vector<Crossing> crossings;
  int free_loops = 0;  // components without crossings

  int components() const;
  bool operator==(const PDCode&) const = default;
};

// "X[a,b,c,d]+,X[...]-,O"; signs are optional on input and inferred from
// consecutive labelling when missing. "O" is a crossingless component.
PDCode parse_pd(std::string_view text);
std::string emit_pd(const PDCode& pd);
void validate(const PDCode& pd);

int writhe(const PDCode& pd);
// Arc cycles of the components that have crossings, ordered by smallest
// label; each cycle starts at its smallest label and follows orientation.
std::vector<std::vector<int>> component_cycles(const PDCode& pd);

// Consecutive labels 1..2n along components.
PDCode relabel(const PDCode& pd);
PDCode mirror(const PDCode& pd);
// Keeps the listed components; index order is component_cycles() followed
// by the free loops.
PDCode sublink(const PDCode& pd, const std::vector<int>& keep);

PDCode braid_closure(const BraidWord& w);
PDCode torus_2(int k);
PDCode pretzel(int p1, int p2, int p3);

// (tau u beta) u kappa; kappa is the last entry of component_cycles().
PDCode tau_cable_unknot(const BraidWord& beta);
PDCode tau_cable_trefoil(const BraidWord& beta);
// Removes the last component that has crossings (kappa for the tau cables).
PDCode drop_last_cycle(const PDCode& pd);

// Unoriented crossings (slots 0 and 2 under) to an oriented PD. Components
// are discovered from seed arcs in the given order and numbered in that
// order; arcs not reachable from a seed are visited afterwards.
PDCode orient_planar(const std::vector<std::array<int, 4>>& rings, int free_loops,
                     const std::vector<int>& seeds = {});

}  // namespace knotcert
