#pragma once

#include "indres/chain_complex.hpp"
#include "indres/integer.hpp"
#include "indres/integer_matrix.hpp"
#include "indres/io.hpp"
#include "indres/mu.hpp"
#include "indres/orbit_model.hpp"
#include "indres/presentation.hpp"
#include "indres/random_models.hpp"
#include "indres/resolution.hpp"
#include "indres/semilattice.hpp"
#include "indres/smith.hpp"
#include "indres/suites.hpp"
