#pragma once

// Umbrella header.

#include "liqdem/delegation_bribery.hpp"
#include "liqdem/election_bribery.hpp"
#include "liqdem/graph.hpp"
#include "liqdem/io.hpp"
#include "liqdem/oracle.hpp"
#include "liqdem/reach.hpp"
#include "liqdem/reductions.hpp"
#include "liqdem/voting.hpp"
#include "liqdem/winner.hpp"
