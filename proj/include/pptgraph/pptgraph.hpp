#pragma once

#include "pptgraph/dvalues.hpp"
#include "pptgraph/enumerate.hpp"
#include "pptgraph/int_math.hpp"
#include "pptgraph/parabola.hpp"
#include "pptgraph/rational.hpp"
#include "pptgraph/svg.hpp"
#include "pptgraph/table.hpp"
#include "pptgraph/triple.hpp"
