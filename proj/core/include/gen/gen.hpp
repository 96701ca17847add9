#pragma once

#include "gen/achievement.hpp"
#include "gen/classifier.hpp"
#include "gen/element_set.hpp"
#include "gen/errors.hpp"
#include "gen/group.hpp"
#include "gen/lattice.hpp"
#include "gen/oracle.hpp"
