#pragma once

#include "suspsplit/admissible.hpp"
#include "suspsplit/constructions.hpp"
#include "suspsplit/degeneracy_calculus.hpp"
#include "suspsplit/error.hpp"
#include "suspsplit/filtration.hpp"
#include "suspsplit/homology.hpp"
#include "suspsplit/integer.hpp"
#include "suspsplit/model.hpp"
#include "suspsplit/parallel.hpp"
#include "suspsplit/report.hpp"
#include "suspsplit/simplicial_set.hpp"
#include "suspsplit/simplicial_space.hpp"
#include "suspsplit/smith.hpp"
#include "suspsplit/splitting.hpp"
