#pragma once

// Umbrella header: decide whether a distance matrix is realizable by a
// weighted tree or by a graph with exactly one cycle, reconstruct the graph,
// and certify the answer.

#include "distreal/compaction.hpp"
#include "distreal/cycle.hpp"
#include "distreal/errors.hpp"
#include "distreal/gen.hpp"
#include "distreal/graph.hpp"
#include "distreal/graph_io.hpp"
#include "distreal/matrix.hpp"
#include "distreal/matrix_io.hpp"
#include "distreal/rational.hpp"
#include "distreal/realize.hpp"
#include "distreal/trace_io.hpp"
#include "distreal/tropical.hpp"
