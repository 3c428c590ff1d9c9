#pragma once

// Umbrella header: the whole V_{n,r} calculus.

#include "vnr/cubes.hpp"
#include "vnr/diagram.hpp"
#include "vnr/dot.hpp"
#include "vnr/forest.hpp"
#include "vnr/permutation.hpp"
#include "vnr/prefix_map.hpp"
#include "vnr/prop.hpp"
#include "vnr/random.hpp"
#include "vnr/suites.hpp"
#include "vnr/text.hpp"
