#pragma once

#include "counting.hpp"
#include "dual.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "lattice.hpp"
#include "rational.hpp"
#include "transforms.hpp"
