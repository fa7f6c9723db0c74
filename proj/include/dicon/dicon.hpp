#pragma once

#include "error.hpp"
#include "rational.hpp"
#include "group_case.hpp"
#include "rootsys.hpp"
#include "orbits.hpp"
#include "weylpoly.hpp"
#include "enumerate.hpp"
#include "constants.hpp"
#include "oracles.hpp"
#include "report.hpp"
#include "verify.hpp"
