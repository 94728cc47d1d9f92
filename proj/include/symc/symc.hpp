#pragma once

#include "catalog.hpp"
#include "io.hpp"
#include "pair_analysis.hpp"
#include "satake.hpp"
#include "structure.hpp"
#include "symmetric_pair.hpp"
