#pragma once

#include "hyclif/error.hpp"
#include "hyclif/scalar.hpp"
#include "hyclif/matrix.hpp"
#include "hyclif/context.hpp"
#include "hyclif/multivecfor.hpp"
#include "hyclif/vecfor.hpp"
#include "hyclif/hyperbolic_space.hpp"
#include "hyclif/endomorphisms.hpp"
#include "hyclif/text.hpp"
#include "hyclif/spinor.hpp"
#include "hyclif/representation.hpp"
#include "hyclif/random.hpp"
#include "hyclif/expr.hpp"
#include "hyclif/suites.hpp"
#include "hyclif/table.hpp"
