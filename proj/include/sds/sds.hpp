#pragma once

// Umbrella header for the whole toolkit.

#include "sds/automorphisms.hpp"
#include "sds/classify.hpp"
#include "sds/common.hpp"
#include "sds/families.hpp"
#include "sds/graph.hpp"
#include "sds/io.hpp"
#include "sds/kappa.hpp"
#include "sds/orientation.hpp"
#include "sds/permutation.hpp"
#include "sds/phase_space.hpp"
#include "sds/random_gen.hpp"
#include "sds/rules.hpp"
#include "sds/symmetry.hpp"
#include "sds/system.hpp"
#include "sds/tutte.hpp"
#include "sds/verify.hpp"
