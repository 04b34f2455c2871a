#pragma once

// Umbrella header for the whole library.

#include "romu/bench.hpp"
#include "romu/bits.hpp"
#include "romu/cycle.hpp"
#include "romu/external.hpp"
#include "romu/generators.hpp"
#include "romu/mono_search.hpp"
#include "romu/pgm.hpp"
#include "romu/risk.hpp"
#include "romu/scaled.hpp"
#include "romu/smoke.hpp"
#include "romu/spec.hpp"
#include "romu/state.hpp"
