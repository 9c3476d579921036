#pragma once

#include "toric_alpha/errors.hpp"
#include "toric_alpha/exact.hpp"
#include "toric_alpha/extended.hpp"
#include "toric_alpha/parallel.hpp"
#include "toric_alpha/sylvester.hpp"
#include "toric_alpha/polytope.hpp"
#include "toric_alpha/diophantine.hpp"
#include "toric_alpha/simplex_bounds.hpp"
#include "toric_alpha/toric.hpp"
#include "toric_alpha/rank1.hpp"
#include "toric_alpha/json_io.hpp"
