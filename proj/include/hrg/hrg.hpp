#pragma once

#include "rational.hpp"
#include "partition.hpp"
#include "splitting.hpp"
#include "cfun.hpp"
#include "rgroup.hpp"
#include "symbols.hpp"
#include "parallel.hpp"
#include "sweeps.hpp"
