#pragma once

#include "gwalk/appendix.hpp"
#include "gwalk/coin.hpp"
#include "gwalk/lattice.hpp"
#include "gwalk/limit.hpp"
#include "gwalk/presets.hpp"
#include "gwalk/quadrature.hpp"
#include "gwalk/spectral.hpp"
#include "gwalk/types.hpp"
