#pragma once

#include "cubesense/cube_search.hpp"
#include "cubesense/dense_graph.hpp"
#include "cubesense/errors.hpp"
#include "cubesense/gallery.hpp"
#include "cubesense/gl_bridge.hpp"
#include "cubesense/measures.hpp"
#include "cubesense/signed_matrix.hpp"
#include "cubesense/spectral.hpp"
#include "cubesense/truth_table.hpp"
#include "cubesense/vertex_set.hpp"
