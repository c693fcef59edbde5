#pragma once

#include "symbolic/atom_flip.hpp"
#include "symbolic/graph_inverse.hpp"
#include "symbolic/munn.hpp"
#include "symbolic/report.hpp"
#include "symbolic/truncate.hpp"
