#pragma once
// Umbrella header.

#include "collatz/cadogan.hpp"
#include "collatz/core.hpp"
#include "collatz/criteria.hpp"
#include "collatz/cycle_search.hpp"
#include "collatz/diagram.hpp"
#include "collatz/natural.hpp"
#include "collatz/trajectory.hpp"
#include "collatz/verify.hpp"
