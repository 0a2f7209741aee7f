// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header: pulls in the whole library.

#pragma once

#include "fdx/cases.hpp"
#include "fdx/errors.hpp"
#include "fdx/interval_set.hpp"
#include "fdx/io.hpp"
#include "fdx/oracle.hpp"
#include "fdx/rational.hpp"
#include "fdx/region.hpp"
#include "fdx/scenario.hpp"
