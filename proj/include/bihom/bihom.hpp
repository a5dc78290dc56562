#pragma once

#include "bihom/bundle.hpp"
#include "bihom/checkers.hpp"
#include "bihom/constructions.hpp"
#include "bihom/error.hpp"
#include "bihom/field.hpp"
#include "bihom/infinitesimal.hpp"
#include "bihom/io.hpp"
#include "bihom/linalg.hpp"
#include "bihom/parallel.hpp"
#include "bihom/quasitriangular.hpp"
#include "bihom/search.hpp"
#include "bihom/tensors.hpp"
