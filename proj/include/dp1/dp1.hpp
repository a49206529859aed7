#pragma once

#include "dp1/bigint.hpp"
#include "dp1/binary_form.hpp"
#include "dp1/chain_lattice.hpp"
#include "dp1/fiber_analysis.hpp"
#include "dp1/fibration.hpp"
#include "dp1/generators.hpp"
#include "dp1/json_io.hpp"
#include "dp1/map_engine.hpp"
#include "dp1/normal_form.hpp"
#include "dp1/parse.hpp"
#include "dp1/plane_curve.hpp"
#include "dp1/rational.hpp"
#include "dp1/singularity.hpp"
#include "dp1/tcoeff.hpp"
#include "dp1/verify_paper.hpp"
#include "dp1/wpoly.hpp"
