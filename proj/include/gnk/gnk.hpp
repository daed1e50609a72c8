#pragma once

#include "gnk/words.hpp"
#include "gnk/g2_engine.hpp"
#include "gnk/g3_groups.hpp"
#include "gnk/free_z2_aut.hpp"
#include "gnk/braid_dynamics.hpp"
#include "gnk/json_io.hpp"
