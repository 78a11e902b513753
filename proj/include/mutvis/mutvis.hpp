#pragma once
// Umbrella header: mutual-visibility sets on products of paths and cycles.

#include "mutvis/automorphism.hpp"
#include "mutvis/constructions.hpp"
#include "mutvis/grid.hpp"
#include "mutvis/solver.hpp"
#include "mutvis/vertex_set.hpp"
#include "mutvis/visibility.hpp"
