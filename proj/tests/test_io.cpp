#include <catch2/catch_amalgamated.hpp>
#include "liqdem/liqdem.hpp"
