#pragma once

#include "ospds/arcs.hpp"
#include "ospds/diagram.hpp"
#include "ospds/ds.hpp"
#include "ospds/howl.hpp"
#include "ospds/oracle.hpp"
#include "ospds/sdim.hpp"
#include "ospds/translate.hpp"
#include "ospds/weightmap.hpp"
