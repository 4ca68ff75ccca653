#pragma once

#include "polyop/error.hpp"
#include "polyop/rational.hpp"
#include "polyop/poly.hpp"
#include "polyop/realroot.hpp"
#include "polyop/bases.hpp"
#include "polyop/operators.hpp"
#include "polyop/diffrep.hpp"
#include "polyop/symbol.hpp"
#include "polyop/random.hpp"
#include "polyop/io.hpp"
