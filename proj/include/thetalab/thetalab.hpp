#pragma once

#include "thetalab/blocks.hpp"
#include "thetalab/chordal.hpp"
#include "thetalab/check.hpp"
#include "thetalab/distance.hpp"
#include "thetalab/error.hpp"
#include "thetalab/generators.hpp"
#include "thetalab/graph.hpp"
#include "thetalab/io.hpp"
#include "thetalab/isometric_cycles.hpp"
#include "thetalab/parallel.hpp"
#include "thetalab/partition.hpp"
#include "thetalab/planar.hpp"
#include "thetalab/relations.hpp"
#include "thetalab/report.hpp"
#include "thetalab/subdivision.hpp"
