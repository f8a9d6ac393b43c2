#pragma once

#include "eulermod/errors.hpp"
#include "eulermod/exactmath/number_theory.hpp"
#include "eulermod/exactmath/polynomial.hpp"
#include "eulermod/exactmath/rational.hpp"
