#pragma once

#include "cohchan/channel.hpp"
#include "cohchan/closedform.hpp"
#include "cohchan/coherence.hpp"
#include "cohchan/config.hpp"
#include "cohchan/errors.hpp"
#include "cohchan/linalg.hpp"
#include "cohchan/sweep.hpp"
