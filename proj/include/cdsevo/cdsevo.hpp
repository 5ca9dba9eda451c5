#pragma once

#include "cdsevo/baselines.hpp"
#include "cdsevo/bench.hpp"
#include "cdsevo/evo.hpp"
#include "cdsevo/generators.hpp"
#include "cdsevo/graph.hpp"
#include "cdsevo/graph_io.hpp"
#include "cdsevo/objectives.hpp"
#include "cdsevo/rng.hpp"
#include "cdsevo/vertex_set.hpp"
