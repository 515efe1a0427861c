#pragma once

#include "polynil/integer.hpp"
#include "polynil/int_matrix.hpp"
#include "polynil/smith.hpp"
#include "polynil/abelian.hpp"
#include "polynil/witt.hpp"
#include "polynil/multiplier.hpp"
#include "polynil/capability.hpp"
#include "polynil/group_spec.hpp"
#include "polynil/report.hpp"
