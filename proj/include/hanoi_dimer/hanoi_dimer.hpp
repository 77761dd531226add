#pragma once

#include "hanoi_dimer/appendix_check.hpp"
#include "hanoi_dimer/cache.hpp"
#include "hanoi_dimer/entropy.hpp"
#include "hanoi_dimer/errors.hpp"
#include "hanoi_dimer/evolve.hpp"
#include "hanoi_dimer/fixtures.hpp"
#include "hanoi_dimer/hanoi_graph.hpp"
#include "hanoi_dimer/hp_real.hpp"
#include "hanoi_dimer/matching_oracle.hpp"
#include "hanoi_dimer/multipoly.hpp"
#include "hanoi_dimer/recursion_gen.hpp"
#include "hanoi_dimer/reproduce.hpp"
