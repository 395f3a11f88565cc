#pragma once

// Umbrella header: exact computations in higher-level q-deformed Fock spaces —
// normal ordering of q-wedge words, the bar involution, canonical bases,
// q-decomposition matrices, and level-comparison checks.

#include "blocks.hpp"      // IWYU pragma: export
#include "cache.hpp"       // IWYU pragma: export
#include "canonical.hpp"   // IWYU pragma: export
#include "fock.hpp"        // IWYU pragma: export
#include "indexing.hpp"    // IWYU pragma: export
#include "laurent.hpp"     // IWYU pragma: export
#include "partitions.hpp"  // IWYU pragma: export
#include "straighten.hpp"  // IWYU pragma: export
#include "theorems.hpp"    // IWYU pragma: export
