#pragma once

// Umbrella header.

#include "bigint.hpp"
#include "bigreal.hpp"
#include "bounds.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "forest.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "lifts.hpp"
#include "matching.hpp"
#include "multigraph.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "report.hpp"
#include "verify.hpp"
