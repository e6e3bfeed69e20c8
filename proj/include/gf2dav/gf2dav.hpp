#pragma once

#include "gf2dav/elemset.hpp"
#include "gf2dav/poly.hpp"
#include "gf2dav/reduce.hpp"
#include "gf2dav/ring.hpp"
#include "gf2dav/zerosum.hpp"
