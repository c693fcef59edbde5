#pragma once

#include "action.hpp"
#include "criterion.hpp"
#include "exception.hpp"
#include "fixtures.hpp"
#include "germ_groupoid.hpp"
#include "io.hpp"
#include "order.hpp"
#include "partial_bijection.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "symbolic.hpp"
#include "types.hpp"
