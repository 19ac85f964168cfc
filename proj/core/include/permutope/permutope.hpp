#pragma once

#include "permutope/cycle_polytope.hpp"
#include "permutope/errors.hpp"
#include "permutope/feasible_region.hpp"
#include "permutope/graph_io.hpp"
#include "permutope/linear_algebra.hpp"
#include "permutope/multigraph.hpp"
#include "permutope/overlap.hpp"
#include "permutope/patterns.hpp"
#include "permutope/permutation.hpp"
#include "permutope/rational.hpp"
#include "permutope/report.hpp"
