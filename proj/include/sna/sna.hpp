#pragma once

// Survivable network analysis toolkit: architecture and scenario models,
// essential/compromisable/softspot set analysis, survivability maps,
// architecture modifications, and report rendering.

#include "sna/analysis.hpp"
#include "sna/architecture.hpp"
#include "sna/core.hpp"
#include "sna/coverage.hpp"
#include "sna/graph_export.hpp"
#include "sna/model_io.hpp"
#include "sna/modifications.hpp"
#include "sna/report.hpp"
#include "sna/scenario.hpp"
#include "sna/survivability_map.hpp"
