#pragma once

// Umbrella header for the whole library.

#include "stefan/analysis.hpp"  // IWYU pragma: export
#include "stefan/exact.hpp"     // IWYU pragma: export
#include "stefan/hbim.hpp"      // IWYU pragma: export
#include "stefan/model.hpp"     // IWYU pragma: export
#include "stefan/numerics.hpp"  // IWYU pragma: export
