#ifndef POLYENT_POLYENT_HPP
#define POLYENT_POLYENT_HPP

#include "polyent/classic_info.hpp"
#include "polyent/composition.hpp"
#include "polyent/distribution.hpp"
#include "polyent/entropy.hpp"
#include "polyent/errors.hpp"
#include "polyent/grid.hpp"
#include "polyent/serialize.hpp"
#include "polyent/synergy.hpp"

#endif  // POLYENT_POLYENT_HPP
