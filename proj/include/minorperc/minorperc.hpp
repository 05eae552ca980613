// Umbrella header.
#pragma once

#include "minorperc/canonical.hpp"
#include "minorperc/classify.hpp"
#include "minorperc/coloring.hpp"
#include "minorperc/common.hpp"
#include "minorperc/constructions.hpp"
#include "minorperc/cover.hpp"
#include "minorperc/degeneracy.hpp"
#include "minorperc/density.hpp"
#include "minorperc/graph.hpp"
#include "minorperc/io.hpp"
#include "minorperc/minor.hpp"
#include "minorperc/oracle.hpp"
#include "minorperc/percolation.hpp"
#include "minorperc/regular.hpp"
#include "minorperc/signatures.hpp"
