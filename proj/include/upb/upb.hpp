#pragma once

#include "upb/audit.hpp"
#include "upb/catalog.hpp"
#include "upb/dot.hpp"
#include "upb/errors.hpp"
#include "upb/extension.hpp"
#include "upb/graph.hpp"
#include "upb/locc.hpp"
#include "upb/orbit.hpp"
#include "upb/ortho_graph.hpp"
#include "upb/report.hpp"
#include "upb/stats.hpp"
#include "upb/uom.hpp"
