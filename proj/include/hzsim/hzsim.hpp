#pragma once

// Umbrella header: the whole library in one include.

#include "hzsim/channel.hpp"
#include "hzsim/config_io.hpp"
#include "hzsim/csv_io.hpp"
#include "hzsim/driver.hpp"
#include "hzsim/errors.hpp"
#include "hzsim/network.hpp"
#include "hzsim/plot.hpp"
#include "hzsim/protocol.hpp"
#include "hzsim/radio.hpp"
#include "hzsim/rng.hpp"
#include "hzsim/simkit.hpp"
#include "hzsim/zoning.hpp"
