#pragma once

#include "incflow/approx_maxflow.hpp"
#include "incflow/bounded_maxflow.hpp"
#include "incflow/flow_network.hpp"
#include "incflow/reach_tree.hpp"
#include "incflow/replay.hpp"
#include "incflow/static_maxflow.hpp"
#include "incflow/stream.hpp"
