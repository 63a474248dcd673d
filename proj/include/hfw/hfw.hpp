#pragma once

#include "hfw/bounds.hpp"
#include "hfw/cliques.hpp"
#include "hfw/coloring.hpp"
#include "hfw/combinatorics.hpp"
#include "hfw/constructions.hpp"
#include "hfw/error.hpp"
#include "hfw/finite_field.hpp"
#include "hfw/graph_class.hpp"
#include "hfw/hypergraph.hpp"
#include "hfw/projective_plane.hpp"
#include "hfw/search.hpp"
#include "hfw/vertex_set.hpp"
#include "hfw/witness.hpp"
