#pragma once

#include "srcolor/coloring.hpp"
#include "srcolor/coloring_map.hpp"
#include "srcolor/complex.hpp"
#include "srcolor/error.hpp"
#include "srcolor/facet_io.hpp"
#include "srcolor/generators.hpp"
#include "srcolor/polynomial.hpp"
#include "srcolor/stanley_reisner.hpp"
#include "srcolor/verifier.hpp"
#include "srcolor/vertex_set.hpp"
