#pragma once

#include "schurkit/common.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/gz_pattern.hpp"
#include "schurkit/yy_path.hpp"
#include "schurkit/registers.hpp"
#include "schurkit/wigner.hpp"
#include "schurkit/clebsch_gordan.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/oracle.hpp"
#include "schurkit/circuit.hpp"
#include "schurkit/json_io.hpp"
