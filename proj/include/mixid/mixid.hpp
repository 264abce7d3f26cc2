#pragma once

// Core modules. Text/JSON output lives in mixid/report.hpp.

#include "mixid/exactnum.hpp"
#include "mixid/regions.hpp"
#include "mixid/thompson.hpp"
#include "mixid/finperm.hpp"
#include "mixid/group.hpp"
#include "mixid/words.hpp"
#include "mixid/oscillation.hpp"
#include "mixid/solver.hpp"
#include "mixid/session.hpp"
