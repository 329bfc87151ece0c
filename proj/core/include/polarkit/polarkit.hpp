#pragma once

#include "polarkit/core_algebra.hpp"
#include "polarkit/covering.hpp"
#include "polarkit/decomp.hpp"
#include "polarkit/isotropic.hpp"
#include "polarkit/jones.hpp"
#include "polarkit/json_io.hpp"
#include "polarkit/small_group.hpp"
#include "polarkit/stokes.hpp"
#include "polarkit/su2_factor.hpp"
#include "polarkit/types.hpp"
