#pragma once

// Convenience header pulling in the whole library.

#include "mton/closed_forms.hpp"
#include "mton/cumulants.hpp"
#include "mton/error.hpp"
#include "mton/harness.hpp"
#include "mton/io.hpp"
#include "mton/laplace.hpp"
#include "mton/partition.hpp"
#include "mton/polynomial.hpp"
#include "mton/rational.hpp"
#include "mton/statistics.hpp"
#include "mton/suites.hpp"
#include "mton/tree.hpp"
