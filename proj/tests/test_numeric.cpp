#include <catch2/catch_amalgamated.hpp>
#include "eigencones/numeric.hpp"
