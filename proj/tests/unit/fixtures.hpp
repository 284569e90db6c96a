#pragma once

#include <string>

#include "ctrz/character_table.hpp"
#include "ctrz/classes.hpp"
#include "ctrz/datasets.hpp"
#include "ctrz/group.hpp"

namespace fx {

// One builtin group with its table already computed; rows in published order.
struct Fixture {
  ctrz::GroupSpec spec;
  ctrz::FiniteGroup group;
  ctrz::ClassSet classes;
  ctrz::CharacterTable table;
  ctrz::ClassFunction chi;
};

const Fixture& g8();
const Fixture& h14();

}  // namespace fx
