#pragma once

#include "gdav/atoms.hpp"
#include "gdav/automorphisms.hpp"
#include "gdav/cache.hpp"
#include "gdav/canonical.hpp"
#include "gdav/cayley.hpp"
#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"
#include "gdav/fingerprint.hpp"
#include "gdav/geodesic.hpp"
#include "gdav/group.hpp"
#include "gdav/group_spec.hpp"
#include "gdav/level_sets.hpp"
#include "gdav/parallel.hpp"
#include "gdav/product_one.hpp"
#include "gdav/report.hpp"
#include "gdav/sequence.hpp"
#include "gdav/structure.hpp"
