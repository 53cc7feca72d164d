#pragma once

#include "forest_cycles/formal_sum.hpp"
#include "forest_cycles/forest.hpp"
#include "forest_cycles/tau.hpp"
#include "forest_cycles/monomial.hpp"
#include "forest_cycles/cycle.hpp"
#include "forest_cycles/forest_cycling.hpp"
#include "forest_cycles/hybrid.hpp"
#include "forest_cycles/numerics.hpp"
#include "forest_cycles/render.hpp"
#include "forest_cycles/json_io.hpp"
#include "forest_cycles/generators.hpp"
