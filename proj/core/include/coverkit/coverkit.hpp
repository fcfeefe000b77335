#pragma once

#include "coverkit/batch.hpp"
#include "coverkit/bitset.hpp"
#include "coverkit/combinatorics.hpp"
#include "coverkit/conjecture_lab.hpp"
#include "coverkit/continuous.hpp"
#include "coverkit/cyclic.hpp"
#include "coverkit/error.hpp"
#include "coverkit/hypergraph.hpp"
#include "coverkit/model_io.hpp"
#include "coverkit/model_spec.hpp"
#include "coverkit/parallel.hpp"
#include "coverkit/rational.hpp"
#include "coverkit/rng.hpp"
#include "coverkit/simulator.hpp"
#include "coverkit/windows.hpp"
