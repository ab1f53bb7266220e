#ifndef LOCSEP_LOCSEP_HPP
#define LOCSEP_LOCSEP_HPP

#include "errors.hpp"
#include "sets.hpp"
#include "graph.hpp"
#include "cycles.hpp"
#include "separation.hpp"
#include "bottleneck.hpp"
#include "tstar.hpp"
#include "local.hpp"
#include "local_structure.hpp"
#include "local_tstar.hpp"
#include "decomposition.hpp"
#include "covering.hpp"
#include "fixtures.hpp"
#include "verify.hpp"
#include "io.hpp"

#endif
