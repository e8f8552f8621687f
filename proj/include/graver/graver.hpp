#pragma once

#include "graver/bigint.hpp"
#include "graver/circuits.hpp"
#include "graver/complexity.hpp"
#include "graver/errors.hpp"
#include "graver/exact_linalg.hpp"
#include "graver/graver_basis.hpp"
#include "graver/kthree/certificate.hpp"
#include "graver/kthree/circuit.hpp"
#include "graver/kthree/verify.hpp"
#include "graver/lattice_vector.hpp"
#include "graver/matrix.hpp"
#include "graver/nfold.hpp"
#include "graver/oracle.hpp"
#include "graver/io.hpp"
