#pragma once

// Umbrella header: exact non-Archimedean valuations, ultrametric
// geometry, finite-precision p-adic expansions, the coordinate space
// K^t, and spectral analysis of diagonal operators with finite-rank
// perturbations.

#include "ultraspec/rational.hpp"
#include "ultraspec/polynomial.hpp"
#include "ultraspec/rational_function.hpp"
#include "ultraspec/valuation.hpp"
#include "ultraspec/function_field.hpp"
#include "ultraspec/ultrametric.hpp"
#include "ultraspec/padic.hpp"
#include "ultraspec/vectors.hpp"
#include "ultraspec/matrix.hpp"
#include "ultraspec/spectral.hpp"
#include "ultraspec/perturbation.hpp"
#include "ultraspec/parse.hpp"
#include "ultraspec/io.hpp"
#include "ultraspec/props.hpp"
