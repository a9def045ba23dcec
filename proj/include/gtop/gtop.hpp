#pragma once

// Umbrella header for the finite-space gamma-operation engine.

#include "gtop/catalog.hpp"
#include "gtop/enumerate.hpp"
#include "gtop/errors.hpp"
#include "gtop/gamma.hpp"
#include "gtop/operation.hpp"
#include "gtop/operation_props.hpp"
#include "gtop/separation.hpp"
#include "gtop/set_family.hpp"
#include "gtop/space.hpp"
#include "gtop/space_format.hpp"
#include "gtop/subset.hpp"
#include "gtop/subspace.hpp"
#include "gtop/theorem_lab.hpp"
#include "gtop/topology.hpp"
#include "gtop/verdict.hpp"
