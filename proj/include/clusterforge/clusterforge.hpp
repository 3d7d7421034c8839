#pragma once

// Umbrella header: cluster-state construction on cubic lattices via Ising,
// exchange-sequence and tuned anisotropic-exchange interactions, plus
// stabilizer verification and JSON I/O.

#include "errors.hpp"
#include "gates.hpp"
#include "json_io.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "pauli.hpp"
#include "protocol.hpp"
#include "schedule.hpp"
#include "statevector.hpp"
