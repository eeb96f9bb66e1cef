#pragma once

#include "chromatic.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "labeling.hpp"
#include "magic.hpp"
#include "matrix.hpp"
#include "registry.hpp"
#include "solver.hpp"
