// trivec.hpp — umbrella header pulling in the whole library.
#pragma once

#include "trivec/basis.hpp"
#include "trivec/canonform.hpp"
#include "trivec/exterior.hpp"
#include "trivec/gme.hpp"
#include "trivec/invariants.hpp"
#include "trivec/linalg.hpp"
#include "trivec/rdm.hpp"
#include "trivec/region.hpp"
#include "trivec/sampling.hpp"
#include "trivec/state.hpp"
#include "trivec/types.hpp"
