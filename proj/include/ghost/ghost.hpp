#pragma once

// Umbrella header for the ghost-imaging detector simulator.

#include "ghost/errors.hpp"
#include "ghost/kinematics.hpp"
#include "ghost/linalg.hpp"
#include "ghost/oracles.hpp"
#include "ghost/pipeline.hpp"
#include "ghost/protocol.hpp"
#include "ghost/register_algebra.hpp"
#include "ghost/scenario.hpp"
#include "ghost/sign_vectors.hpp"
#include "ghost/spdc.hpp"
