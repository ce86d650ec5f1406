#pragma once

// Umbrella header for the relnet graph-analytics library.

#include "relnet/centrality.hpp"
#include "relnet/errors.hpp"
#include "relnet/format.hpp"
#include "relnet/graph.hpp"
#include "relnet/parallel.hpp"
#include "relnet/reliance.hpp"
#include "relnet/score.hpp"
#include "relnet/sssp.hpp"
#include "relnet/subnet.hpp"
