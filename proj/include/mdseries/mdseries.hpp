#pragma once

// Umbrella header: exact-arithmetic power-series toolkit for the two rival
// expansions of the monomer-dimer free energy and the sequence maps (forward,
// inverse, and the two assembly forms) connecting them.

#include "mdseries/catalan.hpp"
#include "mdseries/errors.hpp"
#include "mdseries/expression_one.hpp"
#include "mdseries/expression_two.hpp"
#include "mdseries/lambda_eval.hpp"
#include "mdseries/lpoly.hpp"
#include "mdseries/monomial.hpp"
#include "mdseries/multipoly.hpp"
#include "mdseries/rational.hpp"
#include "mdseries/render.hpp"
#include "mdseries/ring.hpp"
#include "mdseries/series.hpp"
#include "mdseries/transforms.hpp"
#include "mdseries/verify.hpp"
