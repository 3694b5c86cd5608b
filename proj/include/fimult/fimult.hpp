#pragma once

#include "fimult/diagram.hpp"
#include "fimult/errors.hpp"
#include "fimult/multiplicity.hpp"
#include "fimult/oracle.hpp"
#include "fimult/parallel.hpp"
#include "fimult/permutation.hpp"
#include "fimult/presentation.hpp"
#include "fimult/presentation_io.hpp"
#include "fimult/rational_matrix.hpp"
#include "fimult/sparse_echelon.hpp"
#include "fimult/specht.hpp"
#include "fimult/tableau.hpp"
