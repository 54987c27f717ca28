#pragma once

#include "mahler/errors.hpp"
#include "mahler/exact.hpp"
#include "mahler/laurent.hpp"
#include "mahler/measure.hpp"
#include "mahler/parallel.hpp"
#include "mahler/q4.hpp"
#include "mahler/quad.hpp"
#include "mahler/region.hpp"
#include "mahler/serialize.hpp"
#include "mahler/special.hpp"
#include "mahler/theorems.hpp"
#include "mahler/winding.hpp"
