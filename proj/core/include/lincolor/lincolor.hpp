#pragma once

#include "lincolor/class_recognition.hpp"
#include "lincolor/graph.hpp"
#include "lincolor/linear_coloring.hpp"
#include "lincolor/neighborhood_dag.hpp"
#include "lincolor/oracles.hpp"
#include "lincolor/path_cover.hpp"
#include "lincolor/patterns.hpp"
#include "lincolor/strong_ordering.hpp"
#include "lincolor/vertex_set.hpp"
