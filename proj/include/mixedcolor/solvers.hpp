#ifndef MIXEDCOLOR_SOLVERS_HPP
#define MIXEDCOLOR_SOLVERS_HPP

#include "mixedcolor/solvers/branching.hpp"
#include "mixedcolor/solvers/brute_force.hpp"
#include "mixedcolor/solvers/chi_exact.hpp"
#include "mixedcolor/solvers/common.hpp"
#include "mixedcolor/solvers/preorder_ilp.hpp"
#include "mixedcolor/solvers/treewidth_dp.hpp"

#endif
