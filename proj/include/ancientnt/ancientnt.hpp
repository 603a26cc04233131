// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ancientnt/bench.hpp"
#include "ancientnt/diophantine.hpp"
#include "ancientnt/gcd.hpp"
#include "ancientnt/historical.hpp"
#include "ancientnt/integer.hpp"
#include "ancientnt/natural.hpp"
