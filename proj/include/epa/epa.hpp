#pragma once

// Umbrella header for the elliptic Poisson algebra library.

#include "epa/classify.hpp"
#include "epa/degenerate.hpp"
#include "epa/derivation.hpp"
#include "epa/error.hpp"
#include "epa/field.hpp"
#include "epa/linalg.hpp"
#include "epa/morphism.hpp"
#include "epa/parse.hpp"
#include "epa/poisson.hpp"
#include "epa/poly.hpp"
#include "epa/sampling.hpp"
