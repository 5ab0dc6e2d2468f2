#pragma once

// Umbrella header: the whole library.

#include "sexpansion/canonical.hpp"
#include "sexpansion/catalog.hpp"
#include "sexpansion/enumerate.hpp"
#include "sexpansion/error.hpp"
#include "sexpansion/expansion.hpp"
#include "sexpansion/lie_algebra.hpp"
#include "sexpansion/linalg.hpp"
#include "sexpansion/multiplication_table.hpp"
#include "sexpansion/rational.hpp"
#include "sexpansion/resonance.hpp"
#include "sexpansion/version.hpp"
