#pragma once

// Umbrella header for the social-cloud library.

#include "socloud/externalities.hpp"
#include "socloud/graph.hpp"
#include "socloud/io.hpp"
#include "socloud/metrics.hpp"
#include "socloud/sweep.hpp"
