#pragma once

#include "dircent/errors.hpp"
#include "dircent/rng.hpp"
#include "dircent/graph.hpp"
#include "dircent/rational.hpp"
#include "dircent/reachability.hpp"
#include "dircent/exact.hpp"
#include "dircent/sp_sampler.hpp"
#include "dircent/estimate.hpp"
#include "dircent/abad.hpp"
#include "dircent/apad.hpp"
#include "dircent/generators.hpp"
#include "dircent/bench.hpp"
