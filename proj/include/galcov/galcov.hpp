#ifndef GALCOV_GALCOV_HPP_
#define GALCOV_GALCOV_HPP_

#include "error.hpp"
#include "word.hpp"
#include "grid_complex.hpp"
#include "presentation.hpp"
#include "permutation.hpp"
#include "finite_group.hpp"
#include "coset_table.hpp"
#include "reidemeister_schreier.hpp"
#include "smith.hpp"
#include "kernel_homology.hpp"
#include "prover.hpp"
#include "coxeter.hpp"
#include "goals.hpp"
#include "surface.hpp"

#endif  // GALCOV_GALCOV_HPP_
