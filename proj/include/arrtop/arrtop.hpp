// Umbrella header.
#ifndef ARRTOP_ARRTOP_HPP
#define ARRTOP_ARRTOP_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "budget.hpp"
#include "feasibility.hpp"
#include "arrangement.hpp"
#include "chambers.hpp"
#include "social_choice.hpp"
#include "matrix.hpp"
#include "smith.hpp"
#include "complex.hpp"
#include "arrangement_complexes.hpp"
#include "homology.hpp"
#include "sum_identity.hpp"
#include "io.hpp"

#endif
